#pragma once

#include <algorithm>
#include <vector>

#include "ih2/complex.hpp"

namespace ih2 {

/// First barycentric subdivision. Vertex v of the subdivision is the
/// canonical global index of a simplex of the input (dimension-major,
/// lexicographic within a dimension); origin[v] recovers that simplex.
struct BarycentricSubdivision {
    SimplicialComplex complex;
    std::vector<Simplex> origin;

    /// Subdivision vertex id of an input simplex.
    std::size_t vertex_for(const SimplicialComplex& k, const Simplex& s) const {
        std::size_t offset = 0;
        for (int d = 0; d < s.dim(); ++d) offset += k.count(d);
        return offset + k.index_of(s);
    }
};

inline BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
    BarycentricSubdivision out;
    if (k.empty()) return out;

    std::vector<std::size_t> offset(k.dimension() + 1, 0);
    for (int d = 1; d <= k.dimension(); ++d) offset[d] = offset[d - 1] + k.count(d - 1);
    out.origin.reserve(k.total_simplices());
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) out.origin.push_back(s);

    const auto id_of = [&](const Simplex& s) {
        return static_cast<int>(offset[s.dim()] + k.index_of(s));
    };

    // facets of the subdivision = full flags of each maximal simplex;
    // one flag per permutation of its vertices
    std::vector<Simplex> flags;
    for (const auto& facet : k.facets()) {
        std::vector<int> perm = facet.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> chain_ids;
            std::vector<int> prefix;
            chain_ids.reserve(perm.size());
            for (int v : perm) {
                prefix.push_back(v);
                chain_ids.push_back(id_of(Simplex(prefix)));
            }
            flags.emplace_back(chain_ids);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = SimplicialComplex::from_simplices(flags);
    return out;
}

}  // namespace ih2
