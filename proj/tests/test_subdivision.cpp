#include <catch2/catch_amalgamated.hpp>

#include <ih2/catalog.hpp>
#include <ih2/subdivision.hpp>

using namespace ih2;

TEST_CASE("subdividing one edge gives a 3-vertex path") {
    const auto sd = barycentric_subdivision(SimplicialComplex::from_facets({{0, 1}}));
    CHECK(sd.complex.count(0) == 3);
    CHECK(sd.complex.count(1) == 2);
    REQUIRE(sd.origin.size() == 3);
    CHECK(sd.origin[0] == Simplex({0}));
    CHECK(sd.origin[1] == Simplex({1}));
    CHECK(sd.origin[2] == Simplex({0, 1}));
}

TEST_CASE("subdividing one triangle gives six triangles") {
    const auto k = SimplicialComplex::from_facets({{0, 1, 2}});
    const auto sd = barycentric_subdivision(k);
    CHECK(sd.complex.count(2) == 6);
    CHECK(sd.complex.euler_characteristic() == k.euler_characteristic());
}

TEST_CASE("subdivision of the 6-vertex projective plane") {
    const auto k = SimplicialComplex::from_facets(catalog_entry("rp2_6").facets);
    const auto sd = barycentric_subdivision(k);
    CHECK(sd.complex.f_vector() == std::vector<std::size_t>{31, 90, 60});
    CHECK(sd.complex.euler_characteristic() == 1);

    // counts come straight from the face poset: vertices = simplices,
    // edges = strictly nested pairs, triangles = full flags
    std::size_t pairs = 0;
    std::size_t flags = 0;
    for (int d = 0; d <= 2; ++d)
        for (std::size_t i = 0; i < k.count(d); ++i) {
            pairs += (std::size_t{1} << (d + 1)) - 2;  // proper nonempty faces
            if (d == 2) flags += 6;
        }
    CHECK(sd.complex.count(0) == k.total_simplices());
    CHECK(sd.complex.count(1) == pairs);
    CHECK(sd.complex.count(2) == flags);
}

TEST_CASE("subdivision preserves the euler characteristic on the catalog") {
    for (const auto& name : catalog_names()) {
        const auto k = SimplicialComplex::from_facets(catalog_entry(name).facets);
        const auto sd = barycentric_subdivision(k);
        INFO(name);
        CHECK(sd.complex.euler_characteristic() == k.euler_characteristic());
    }
}

TEST_CASE("origin map is consistent with vertex ids") {
    const auto k = SimplicialComplex::from_facets(catalog_entry("torus7").facets);
    const auto sd = barycentric_subdivision(k);
    REQUIRE(sd.origin.size() == k.total_simplices());
    for (std::size_t v = 0; v < sd.origin.size(); ++v)
        CHECK(sd.vertex_for(k, sd.origin[v]) == v);
    // each facet of the subdivision is a full flag: dimensions 0..dim
    for (const auto& f : sd.complex.facets()) {
        REQUIRE(f.dim() == k.dimension());
        for (int i = 0; i <= f.dim(); ++i) {
            CHECK(sd.origin[f.vertices()[i]].dim() == i);
            if (i > 0)
                CHECK(sd.origin[f.vertices()[i - 1]].is_face_of(sd.origin[f.vertices()[i]]));
        }
    }
}
