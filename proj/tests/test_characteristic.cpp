#include <catch2/catch_amalgamated.hpp>

#include <ih2/catalog.hpp>
#include <ih2/characteristic.hpp>
#include <ih2/space_io.hpp>

using namespace ih2;

namespace {
SimplicialComplex load(const std::string& name) {
    return SimplicialComplex::from_facets(catalog_entry(name).facets);
}
}  // namespace

TEST_CASE("fundamental class") {
    SECTION("circle: the sum of all three edges is a cycle") {
        const auto k = load("circle");
        const auto fc = fundamental_class(k);
        CHECK(fc.count() == 3);
        CHECK(k.boundary_matrix(1).apply(fc).none());
    }
    SECTION("projective plane: all ten triangles") {
        const auto k = load("rp2_6");
        const auto fc = fundamental_class(k);
        CHECK(fc.count() == 10);
        CHECK(k.boundary_matrix(2).apply(fc).none());
    }
    SECTION("a single triangle has no fundamental class") {
        CHECK_THROWS_AS(fundamental_class(SimplicialComplex::from_facets({{0, 1, 2}})),
                        InputError);
    }
}

TEST_CASE("stiefel-whitney classes of the circle") {
    const auto sw = sw_homology_classes(load("circle"));
    // six subdivision vertices: an even number of points, so w_0 bounds
    CHECK(sw.subdivision.complex.count(0) == 6);
    CHECK(sw.is_cycle[0]);
    CHECK(sw.vanishing[0]);
    // w_1 is the fundamental class of the subdivision
    CHECK(sw.classes[1] == fundamental_class(sw.subdivision.complex));
    CHECK(sw.is_cycle[1]);
    CHECK_FALSE(sw.vanishing[1]);
}

TEST_CASE("w_1 distinguishes the torus from the nonorientable surfaces") {
    const auto torus = sw_homology_classes(load("torus7"));
    CHECK(torus.is_cycle[1]);
    CHECK(torus.vanishing[1]);  // trivial tangent bundle

    const auto rp2 = sw_homology_classes(load("rp2_6"));
    CHECK(rp2.is_cycle[1]);
    CHECK_FALSE(rp2.vanishing[1]);

    const auto klein = sw_homology_classes(load("klein"));
    CHECK(klein.is_cycle[1]);
    CHECK_FALSE(klein.vanishing[1]);  // the orientation class survives
}

TEST_CASE("every class of a closed catalog manifold is a cycle") {
    for (const auto& name : {"circle", "sphere2", "torus7", "rp2_6", "klein"}) {
        const auto k = load(name);
        const auto sw = sw_homology_classes(k);
        INFO(name);
        for (std::size_t i = 0; i < sw.is_cycle.size(); ++i) CHECK(sw.is_cycle[i]);
        CHECK(sw.classes.back() == fundamental_class(sw.subdivision.complex));
        CHECK_FALSE(sw.vanishing.back());
    }
}

TEST_CASE("top stiefel-whitney numbers") {
    CHECK(top_sw_number(load("torus7")) == 0);
    CHECK(top_sw_number(load("rp2_6")) == 1);
    CHECK(top_sw_number(load("sphere2")) == 0);
    CHECK(top_sw_number(load("klein")) == 0);
    CHECK_THROWS_AS(top_sw_number(SimplicialComplex::from_facets({{0, 1, 2}})), InputError);
}

TEST_CASE("top number is invariant under subdivision") {
    for (const auto& name : {"torus7", "rp2_6", "klein"}) {
        const auto k = load(name);
        INFO(name);
        CHECK(top_sw_number(k) == top_sw_number(barycentric_subdivision(k).complex));
    }
}

TEST_CASE("closed non-manifolds still compute, reporting cycle failures") {
    // the pinched torus is an euler space (all link euler characteristics
    // even), so every class is still a cycle
    const auto pinched = sw_homology_classes(
        SimplicialComplex::from_facets(catalog_entry("pinched_torus").facets));
    for (std::size_t i = 0; i < pinched.is_cycle.size(); ++i) CHECK(pinched.is_cycle[i]);

    // the suspended projective plane is not: the apex links have odd euler
    // characteristic, and w_1 fails to be a cycle
    const auto susp = sw_homology_classes(
        SimplicialComplex::from_facets(catalog_entry("susp_rp2").facets));
    CHECK(susp.is_cycle[0]);
    CHECK_FALSE(susp.is_cycle[1]);
    CHECK(susp.is_cycle[3]);

    // open complexes are rejected outright
    CHECK_THROWS_AS(sw_homology_classes(load("disk_cone")), InputError);
}

TEST_CASE("bordism shadow reports") {
    SECTION("the projective plane cannot bound") {
        const auto r = bordism_shadow_report(load("rp2_6"));
        CHECK(r.top_number == 1);
        CHECK(r.obstructed);
    }
    SECTION("the torus shows no obstruction") {
        const auto r = bordism_shadow_report(load("torus7"));
        CHECK(r.top_number == 0);
        CHECK_FALSE(r.obstructed);
        // every class below the top degree bounds
        CHECK(r.class_vanishing[0]);
        CHECK(r.class_vanishing[1]);
    }
    SECTION("the klein bottle: top number zero, w_1 nonzero, still no claim") {
        const auto r = bordism_shadow_report(load("klein"));
        CHECK(r.top_number == 0);
        CHECK_FALSE(r.class_vanishing[1]);
        CHECK_FALSE(r.obstructed);
    }
}
