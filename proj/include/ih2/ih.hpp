#pragma once

#include <vector>

#include "ih2/homology.hpp"
#include "ih2/intersection.hpp"

namespace ih2 {

/// Intersection homology of the filtered complex: homology of the chain
/// complex assembled from the per-degree IC bases. Generators, when
/// requested, come back in the coordinates of the full complex.
inline HomologyResult ih(const FilteredComplex& x, const Perversity& p,
                         bool with_generators = false) {
    const ICComplex ic = assemble_ic(x, p);
    HomologyResult res = homology(ic.cc, with_generators);
    if (with_generators) {
        for (int i = 0; i <= ic.cc.top_degree(); ++i) {
            std::vector<BitVec> mapped;
            for (const auto& gen : res.generators[i]) {
                BitVec chain(x.complex().count(i));
                for (auto b : gen.ones()) chain ^= ic.basis[i][b];
                mapped.push_back(std::move(chain));
            }
            res.generators[i] = std::move(mapped);
        }
    }
    return res;
}

struct OmegaRank {
    std::size_t ih_rank = 0;
    std::size_t h_rank = 0;
    std::size_t image_rank = 0;  // rank of IH_i -> H_i induced by inclusion
};

/// Rank data of the map on homology induced by IC_i ↪ C_i, for every
/// degree, from one IC assembly. The image dimension is the span of the
/// IC cycles modulo all boundaries: dim Z(IC) − dim(Z(IC) ∩ B).
inline std::vector<OmegaRank> omega_ranks(const FilteredComplex& x, const Perversity& p) {
    const int a = x.ambient_dim();
    const SimplicialComplex& k = x.complex();
    const ICComplex ic = assemble_ic(x, p);
    const HomologyResult ic_h = homology(ic.cc);
    const HomologyResult full_h = homology(k);

    std::vector<OmegaRank> out(a + 1);
    for (int degree = 0; degree <= a; ++degree) {
        out[degree].ih_rank = ic_h.ranks[degree];
        out[degree].h_rank = full_h.ranks[degree];

        std::vector<BitVec> ic_cycles;
        for (const auto& z : nullspace_basis(ic.cc.boundary[degree])) {
            BitVec chain(k.count(degree));
            for (auto b : z.ones()) chain ^= ic.basis[degree][b];
            ic_cycles.push_back(std::move(chain));
        }

        std::vector<BitVec> boundaries;
        if (degree < a) {
            const GF2Matrix rows = k.boundary_rows(degree + 1);
            for (std::size_t j = 0; j < rows.rows(); ++j) boundaries.push_back(rows.row(j));
        }

        out[degree].image_rank = ic_cycles.size() - intersect_dim(ic_cycles, boundaries);
    }
    return out;
}

inline OmegaRank omega_rank(const FilteredComplex& x, const Perversity& p, int degree) {
    const int a = x.ambient_dim();
    if (degree < 0 || degree > a)
        throw InputError("degree " + std::to_string(degree) + " outside 0.." +
                         std::to_string(a));
    return omega_ranks(x, p)[degree];
}

}  // namespace ih2
