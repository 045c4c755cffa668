#include <catch2/catch_amalgamated.hpp>

#include <ih2/catalog.hpp>
#include <ih2/complex.hpp>
#include <ih2/pseudomanifold.hpp>
#include <ih2/space_io.hpp>

#include "oracle.hpp"

using namespace ih2;

TEST_CASE("closure of a single triangle") {
    const auto k = SimplicialComplex::from_facets({{0, 1, 2}});
    CHECK(k.dimension() == 2);
    CHECK(k.count(0) == 3);
    CHECK(k.count(1) == 3);
    CHECK(k.count(2) == 1);
    // face closure property: every face of every simplex is present
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
            for (const auto& f : s.facets()) CHECK(k.contains(f));
}

TEST_CASE("builder rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{-1, 2}}), InputError);
}

TEST_CASE("builder drops non-maximal facets") {
    const auto k = SimplicialComplex::from_facets({{0, 1}, {0, 1, 2}});
    REQUIRE(k.facets().size() == 1);
    CHECK(k.facets()[0] == Simplex({0, 1, 2}));
}

TEST_CASE("f-vector of the 6-vertex projective plane matches the naive closure") {
    const auto facets = catalog_entry("rp2_6").facets;
    const auto k = SimplicialComplex::from_facets(facets);
    CHECK(k.f_vector() == std::vector<std::size_t>{6, 15, 10});
    const auto by_dim = oracle::closure(facets);
    REQUIRE(by_dim.size() == 3);
    CHECK(by_dim[0].size() == 6);
    CHECK(by_dim[1].size() == 15);
    CHECK(by_dim[2].size() == 10);
    CHECK(k.euler_characteristic() == 1);
}

TEST_CASE("pseudomanifold validation") {
    SECTION("triangle circle is closed") {
        const auto k = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
        const auto r = validate_pseudomanifold(k);
        CHECK(r.is_pure);
        CHECK(r.kind == PseudomanifoldKind::Closed);
        CHECK(r.boundary_facets.empty());
    }
    SECTION("single triangle has its three edges as boundary") {
        const auto r = validate_pseudomanifold(SimplicialComplex::from_facets({{0, 1, 2}}));
        CHECK(r.kind == PseudomanifoldKind::WithBoundary);
        CHECK(r.boundary_facets.size() == 3);
    }
    SECTION("bowtie: two triangles sharing a vertex") {
        const auto k = SimplicialComplex::from_facets({{0, 1, 2}, {2, 3, 4}});
        const auto r = validate_pseudomanifold(k);
        CHECK(r.is_pure);
        CHECK(r.kind == PseudomanifoldKind::WithBoundary);
        // all six edges lie in exactly one triangle each
        CHECK(r.boundary_facets.size() == 6);
    }
    SECTION("impure complex") {
        const auto k = SimplicialComplex::from_facets({{0, 1, 2}, {3, 4}});
        const auto r = validate_pseudomanifold(k);
        CHECK_FALSE(r.is_pure);
        CHECK(r.kind == PseudomanifoldKind::NotPseudomanifold);
        REQUIRE(r.offending.size() == 1);
        CHECK(r.offending[0] == Simplex({3, 4}));
    }
    SECTION("three triangles around one edge") {
        const auto k = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
        CHECK(validate_pseudomanifold(k).kind == PseudomanifoldKind::NotPseudomanifold);
    }
}

TEST_CASE("links") {
    const auto circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    SECTION("link of a circle vertex is two points") {
        const auto l = link(circle, Simplex({0}));
        CHECK(l.dimension() == 0);
        CHECK(l.count(0) == 2);
    }
    SECTION("vertex links in the projective plane are 5-cycles") {
        const auto k = SimplicialComplex::from_facets(catalog_entry("rp2_6").facets);
        for (const auto& v : k.simplices(0)) {
            const auto l = link(k, v);
            CHECK(l.count(0) == 5);
            CHECK(l.count(1) == 5);
            CHECK(validate_pseudomanifold(l).kind == PseudomanifoldKind::Closed);
        }
    }
    SECTION("link of the cone apex is the base") {
        const auto c = cone(circle);
        const auto l = link(c, Simplex({next_vertex_id(circle)}));
        CHECK(l.dimension() == circle.dimension());
        for (int d = 0; d <= circle.dimension(); ++d)
            CHECK(l.simplices(d) == circle.simplices(d));
    }
    SECTION("link of a facet is empty") {
        CHECK(link(circle, Simplex({0, 1})).empty());
    }
    SECTION("link of a missing simplex is an error") {
        CHECK_THROWS_AS(link(circle, Simplex({5})), InputError);
    }
}

TEST_CASE("cone and suspension") {
    SECTION("cone over two points is a path") {
        const auto k = SimplicialComplex::from_facets({{0}, {1}});
        const auto c = cone(k);
        CHECK(c.dimension() == 1);
        CHECK(c.count(0) == 3);
        CHECK(c.count(1) == 2);
    }
    SECTION("suspension of the circle is a closed 2-sphere") {
        const auto circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
        const auto s = suspension(circle);
        CHECK(s.dimension() == 2);
        CHECK(s.count(0) == 5);
        CHECK(validate_pseudomanifold(s).kind == PseudomanifoldKind::Closed);
        CHECK(s.euler_characteristic() == 2);
    }
    SECTION("suspension of the 7-vertex torus") {
        const auto torus = SimplicialComplex::from_facets(catalog_entry("torus7").facets);
        const auto s = suspension(torus);
        CHECK(s.dimension() == 3);
        CHECK(s.count(0) == 9);
        CHECK(validate_pseudomanifold(s).kind == PseudomanifoldKind::Closed);
    }
}

TEST_CASE("euler characteristics of catalog surfaces") {
    CHECK(SimplicialComplex::from_facets(catalog_entry("circle").facets)
              .euler_characteristic() == 0);
    CHECK(SimplicialComplex::from_facets(catalog_entry("rp2_6").facets)
              .euler_characteristic() == 1);
    CHECK(SimplicialComplex::from_facets(catalog_entry("torus7").facets)
              .euler_characteristic() == 0);
}

TEST_CASE("suspension of every closed catalog space stays closed") {
    for (const auto& name : catalog_names()) {
        const auto k = SimplicialComplex::from_facets(catalog_entry(name).facets);
        if (validate_pseudomanifold(k).kind != PseudomanifoldKind::Closed) continue;
        CHECK(validate_pseudomanifold(suspension(k)).kind == PseudomanifoldKind::Closed);
    }
}

TEST_CASE("catalog surfaces are manifolds: vertex links are circles") {
    for (const auto& name : {"sphere2", "torus7", "rp2_6", "klein"}) {
        const auto k = SimplicialComplex::from_facets(catalog_entry(name).facets);
        for (const auto& v : k.simplices(0)) {
            const auto l = link(k, v);
            INFO(name << " vertex " << v.to_string());
            CHECK(validate_pseudomanifold(l).kind == PseudomanifoldKind::Closed);
            CHECK(l.count(0) == l.count(1));  // a closed 1-manifold
            // connected: one circle, not several
            const auto h = oracle::betti_mod2([&] {
                std::vector<std::vector<int>> fs;
                for (const auto& e : l.simplices(1)) fs.push_back(e.vertices());
                return fs;
            }());
            CHECK(h[0] == 1);
        }
    }
}
