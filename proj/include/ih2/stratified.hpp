#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ih2/filtration.hpp"

namespace ih2 {

struct StratumComponent {
    int skeleton_index = 0;  // k; equals the ambient dimension for the regular stratum
    int codimension = 0;
    std::vector<Simplex> simplices;  // (dimension, lex) order
    /// A k-simplex of the component; its open star automatically misses
    /// X_{k-1}, so its link carries the transverse structure. Absent when
    /// the triangulation is too coarse for this stratum.
    std::optional<Simplex> representative;
};

struct StratumInfo {
    int skeleton_index = 0;
    int codimension = 0;
    int dimension = 0;  // largest simplex dimension occurring in the stratum
    std::vector<StratumComponent> components;
};

/// Strata X_k \ X_{k-1} for k = 0..a-2 (nonempty ones) followed by the
/// regular stratum. Components are connected through face relations inside
/// the stratum.
inline std::vector<StratumInfo> strata(const FilteredComplex& x) {
    const SimplicialComplex& k = x.complex();
    const int a = x.ambient_dim();

    std::map<int, std::vector<Simplex>> by_level;
    for (int d = 0; d <= a; ++d)
        for (std::size_t i = 0; i < k.count(d); ++i)
            by_level[x.simplex_level(d, i)].push_back(k.simplices(d)[i]);

    std::vector<StratumInfo> out;
    for (auto& [level, members] : by_level) {
        std::sort(members.begin(), members.end(), dim_lex_less);
        std::map<Simplex, std::size_t> pos;
        for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;

        // union-find over face relations within the stratum
        std::vector<std::size_t> parent(members.size());
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (std::size_t i = 0; i < members.size(); ++i)
            for (const auto& f : members[i].facets()) {
                const auto it = pos.find(f);
                if (it != pos.end()) parent[find(i)] = find(it->second);
            }

        std::map<std::size_t, StratumComponent> comps;
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto& comp = comps[find(i)];
            comp.simplices.push_back(members[i]);
        }

        StratumInfo info;
        info.skeleton_index = level;
        info.codimension = a - level;
        info.dimension = 0;
        for (auto& [root, comp] : comps) {
            comp.skeleton_index = level;
            comp.codimension = a - level;
            for (const auto& s : comp.simplices) {
                info.dimension = std::max(info.dimension, s.dim());
                if (s.dim() == level && !comp.representative) comp.representative = s;
            }
            info.components.push_back(std::move(comp));
        }
        // components keyed by union-find root; order them by first member
        std::sort(info.components.begin(), info.components.end(),
                  [](const StratumComponent& lhs, const StratumComponent& rhs) {
                      return dim_lex_less(lhs.simplices.front(), rhs.simplices.front());
                  });
        out.push_back(std::move(info));
    }
    return out;
}

/// Link of the component's representative simplex, with the induced
/// filtration: the link meets X_{k+1+j} in its j-th skeleton.
inline FilteredComplex stratum_link(const FilteredComplex& x, const StratumComponent& c) {
    if (!c.representative)
        throw InputError(
            "stratum of codimension " + std::to_string(c.codimension) +
            " has no representative simplex of dimension " + std::to_string(c.skeleton_index) +
            "; the filtration is too coarse for this triangulation - apply a barycentric "
            "subdivision");
    const int a = x.ambient_dim();
    const int k = c.skeleton_index;
    const SimplicialComplex l = link(x.complex(), *c.representative);
    if (l.dimension() != a - k - 1)
        throw InputError("link of " + c.representative->to_string() + " has dimension " +
                         std::to_string(l.dimension()) + ", expected " +
                         std::to_string(a - k - 1));
    std::vector<SkeletonSpec> skeleta;
    const std::vector<int> lverts = l.vertices();
    for (int j = 0; j <= l.dimension() - 2; ++j) {
        SkeletonSpec spec;
        spec.dim = j;
        for (int v : lverts)
            if (x.vertex_level(v) <= k + 1 + j) spec.vertices.push_back(v);
        skeleta.push_back(std::move(spec));
    }
    return FilteredComplex::build(l, skeleta);
}

/// Suspension with the canonical stratification: the two apexes form the
/// new X_0 and every old skeleton is suspended one level up.
inline FilteredComplex suspend_filtered(const FilteredComplex& x) {
    const SimplicialComplex& k = x.complex();
    const int a = x.ambient_dim();
    const int north = next_vertex_id(k);
    const int south = north + 1;
    SimplicialComplex sk = suspension(k);
    std::vector<SkeletonSpec> skeleta;
    skeleta.push_back({0, {north, south}});
    for (int j = 1; j <= a - 1; ++j) {
        SkeletonSpec spec;
        spec.dim = j;
        spec.vertices = x.skeleton_vertices(j - 1);
        spec.vertices.push_back(north);
        spec.vertices.push_back(south);
        std::sort(spec.vertices.begin(), spec.vertices.end());
        skeleta.push_back(std::move(spec));
    }
    return FilteredComplex::build(std::move(sk), skeleta);
}

/// Cone with the canonical stratification: the apex is the new X_0 and
/// every old skeleton is coned one level up.
inline FilteredComplex cone_filtered(const FilteredComplex& x) {
    const SimplicialComplex& k = x.complex();
    const int a = x.ambient_dim();
    const int apex = next_vertex_id(k);
    SimplicialComplex ck = cone(k);
    std::vector<SkeletonSpec> skeleta;
    skeleta.push_back({0, {apex}});
    for (int j = 1; j <= a - 1; ++j) {
        SkeletonSpec spec;
        spec.dim = j;
        spec.vertices = x.skeleton_vertices(j - 1);
        spec.vertices.push_back(apex);
        std::sort(spec.vertices.begin(), spec.vertices.end());
        skeleta.push_back(std::move(spec));
    }
    return FilteredComplex::build(std::move(ck), skeleta);
}

}  // namespace ih2
