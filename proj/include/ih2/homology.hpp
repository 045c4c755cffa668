#pragma once

#include <vector>

#include "ih2/chain_complex.hpp"
#include "ih2/gf2.hpp"

namespace ih2 {

struct HomologyResult {
    std::vector<std::size_t> ranks;
    /// Per-degree cycle representatives (one per rank unit), in the
    /// coordinates of the chain complex; filled only on request.
    std::vector<std::vector<BitVec>> generators;
};

/// Ranks via rank-nullity over GF(2); generators are the first nullspace
/// vectors independent of the boundary span, in elimination order.
inline HomologyResult homology(const ChainComplexF2& c, bool with_generators = false) {
    c.validate();
    const int top = c.top_degree();
    HomologyResult out;
    out.ranks.resize(top + 1, 0);
    if (with_generators) out.generators.resize(top + 1);

    std::vector<std::size_t> boundary_rank(top + 2, 0);
    for (int i = 1; i <= top; ++i) boundary_rank[i] = rank(c.boundary[i]);

    for (int i = 0; i <= top; ++i) {
        const std::size_t cycles = c.dims[i] - boundary_rank[i];
        const std::size_t boundaries = i < top ? boundary_rank[i + 1] : 0;
        out.ranks[i] = cycles - boundaries;

        if (with_generators && out.ranks[i] > 0) {
            Echelon span(c.dims[i]);
            if (i < top) {
                const GF2Matrix cols = c.boundary[i + 1].transposed();
                for (std::size_t j = 0; j < cols.rows(); ++j) span.insert(cols.row(j));
            }
            for (const auto& z : nullspace_basis(c.boundary[i]))
                if (span.insert(z)) out.generators[i].push_back(z);
            if (out.generators[i].size() != out.ranks[i])
                throw InternalError("homology generator count mismatch");
        }
    }
    return out;
}

inline HomologyResult homology(const SimplicialComplex& k, bool with_generators = false) {
    return homology(chain_complex(k), with_generators);
}

}  // namespace ih2
