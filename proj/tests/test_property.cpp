// Randomized cross-checks of the whole complex pipeline against the naive
// oracle implementations.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ih2/complex.hpp>
#include <ih2/homology.hpp>
#include <ih2/pseudomanifold.hpp>
#include <ih2/subdivision.hpp>

#include "oracle.hpp"

using namespace ih2;

namespace {

std::vector<std::vector<int>> random_facets(std::mt19937_64& rng) {
    const int n_facets = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> facets;
    for (int f = 0; f < n_facets; ++f) {
        const int size = 1 + static_cast<int>(rng() % 4);
        std::vector<int> verts;
        while (static_cast<int>(verts.size()) < size) {
            const int v = static_cast<int>(rng() % 7);
            bool fresh = true;
            for (int u : verts) fresh &= (u != v);
            if (fresh) verts.push_back(v);
        }
        facets.push_back(verts);
    }
    return facets;
}

}  // namespace

TEST_CASE("random complexes agree with the naive oracle") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        const auto facets = random_facets(rng);
        const auto k = SimplicialComplex::from_facets(facets);
        INFO("trial " << trial);

        // closure and counts match the oracle
        const auto by_dim = oracle::closure(facets);
        REQUIRE(k.dimension() + 1 == static_cast<int>(by_dim.size()));
        for (int d = 0; d <= k.dimension(); ++d) REQUIRE(k.count(d) == by_dim[d].size());

        // face closure property
        for (int d = 1; d <= k.dimension(); ++d)
            for (const auto& s : k.simplices(d))
                for (const auto& f : s.facets()) REQUIRE(k.contains(f));

        // homology against the oracle, and the euler identity
        const auto h = homology(k);
        REQUIRE(h.ranks == oracle::betti_mod2(facets));
        long alt = 0;
        for (std::size_t i = 0; i < h.ranks.size(); ++i)
            alt += (i % 2 == 0) ? static_cast<long>(h.ranks[i]) : -static_cast<long>(h.ranks[i]);
        REQUIRE(alt == k.euler_characteristic());

        // barycentric subdivision preserves the homotopy type
        const auto sd = barycentric_subdivision(k);
        REQUIRE(sd.complex.euler_characteristic() == k.euler_characteristic());
        REQUIRE(homology(sd.complex).ranks == h.ranks);
    }
}
