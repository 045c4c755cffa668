#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ih2/complex.hpp"
#include "ih2/errors.hpp"
#include "ih2/pseudomanifold.hpp"

namespace ih2 {

/// One closed skeleton, given as the vertex set of a full subcomplex.
struct SkeletonSpec {
    int dim = 0;
    std::vector<int> vertices;
};

/// A pure complex of dimension a with nested closed skeleta
/// X_0 ⊆ X_1 ⊆ ... ⊆ X_{a-2}, each the full subcomplex on a vertex set;
/// there is no codimension-one skeleton (X_{a-1} = X_{a-2} implicitly).
/// A simplex lies in X_k exactly when all of its vertices do, so each
/// vertex carries the least k admitting it and simplex membership reduces
/// to vertex levels.
class FilteredComplex {
public:
    /// All skeleta empty; every simplex regular. Admits any complex.
    static FilteredComplex trivial(SimplicialComplex k) {
        FilteredComplex x;
        x.k_ = std::move(k);
        const int a = x.k_.dimension();
        x.skeleton_vertices_.assign(std::max(0, a - 1), {});
        x.index_levels();
        return x;
    }

    static FilteredComplex build(SimplicialComplex k,
                                 const std::vector<SkeletonSpec>& skeleta) {
        if (k.empty()) throw InputError("filtration over the empty complex");
        const auto pm = validate_pseudomanifold(k);
        if (!pm.is_pure)
            throw InputError("filtration requires a pure complex; offending simplex " +
                             pm.offending.front().to_string());

        FilteredComplex x = trivial(std::move(k));
        const int a = x.k_.dimension();

        const std::vector<int> all_vertices = x.k_.vertices();
        int prev_dim = -1;
        std::vector<int> prev_set;
        for (const auto& spec : skeleta) {
            if (spec.dim == a - 1)
                throw InputError("codimension-one skeleton X_" + std::to_string(spec.dim) +
                                 " is not allowed");
            if (spec.dim < 0 || spec.dim > a - 2)
                throw InputError("skeleton dimension " + std::to_string(spec.dim) +
                                 " outside 0.." + std::to_string(a - 2));
            if (spec.dim <= prev_dim)
                throw InputError("skeleton dimensions must be strictly increasing");
            std::vector<int> verts = spec.vertices;
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            for (int v : verts)
                if (!std::binary_search(all_vertices.begin(), all_vertices.end(), v))
                    throw InputError("skeleton vertex " + std::to_string(v) +
                                     " is not a vertex of the complex");
            if (!std::includes(verts.begin(), verts.end(), prev_set.begin(), prev_set.end()))
                throw InputError("skeleta not nested: X_" + std::to_string(spec.dim) +
                                 " does not contain X_" + std::to_string(prev_dim));
            for (int j = spec.dim; j <= a - 2; ++j) x.skeleton_vertices_[j] = verts;
            prev_dim = spec.dim;
            prev_set = std::move(verts);
        }

        x.index_levels();

        // the full subcomplex on V_k may not exceed dimension k
        for (int d = 0; d <= a; ++d)
            for (std::size_t i = 0; i < x.k_.count(d); ++i) {
                const int level = x.level_[d][i];
                if (level <= a - 2 && d > level)
                    throw InputError("skeleton X_" + std::to_string(level) +
                                     " has dimension > " + std::to_string(level) +
                                     ": contains " + x.k_.simplices(d)[i].to_string());
            }
        return x;
    }

    const SimplicialComplex& complex() const { return k_; }
    int ambient_dim() const { return k_.dimension(); }

    bool has_singularities() const {
        for (const auto& s : skeleton_vertices_)
            if (!s.empty()) return true;
        return false;
    }

    /// Cumulative vertex set of X_k, for 0 <= k <= ambient_dim()-2.
    const std::vector<int>& skeleton_vertices(int k) const {
        static const std::vector<int> none;
        if (k < 0 || k >= static_cast<int>(skeleton_vertices_.size())) return none;
        return skeleton_vertices_[k];
    }

    /// Minimal skeleton jumps (k, vertex set), suitable for emission.
    std::vector<SkeletonSpec> skeleton_jumps() const {
        std::vector<SkeletonSpec> out;
        std::vector<int> prev;
        for (int k = 0; k < static_cast<int>(skeleton_vertices_.size()); ++k)
            if (skeleton_vertices_[k] != prev) {
                out.push_back({k, skeleton_vertices_[k]});
                prev = skeleton_vertices_[k];
            }
        return out;
    }

    /// Least k with v in X_k, or ambient_dim() when v is regular.
    int vertex_level(int v) const {
        const auto it = vertex_level_.find(v);
        return it == vertex_level_.end() ? ambient_dim() : it->second;
    }

    /// Least k with the whole simplex in X_k, or ambient_dim().
    int simplex_level(const Simplex& s) const {
        int level = 0;
        for (int v : s.vertices()) level = std::max(level, vertex_level(v));
        return level;
    }

    int simplex_level(int d, std::size_t index) const { return level_[d][index]; }

    /// Number of vertices of s lying in X_k; dim(s ∩ X_k) is one less,
    /// with zero meaning the intersection is empty.
    std::size_t skeleton_vertex_count(const Simplex& s, int k) const {
        std::size_t n = 0;
        for (int v : s.vertices())
            if (vertex_level(v) <= k) ++n;
        return n;
    }

private:
    void index_levels() {
        vertex_level_.clear();
        const int a = ambient_dim();
        for (int k = static_cast<int>(skeleton_vertices_.size()); k-- > 0;)
            for (int v : skeleton_vertices_[k]) vertex_level_[v] = k;
        level_.assign(a + 1, {});
        for (int d = 0; d <= a; ++d) {
            level_[d].resize(k_.count(d));
            for (std::size_t i = 0; i < k_.count(d); ++i)
                level_[d][i] = simplex_level(k_.simplices(d)[i]);
        }
    }

    SimplicialComplex k_;
    std::vector<std::vector<int>> skeleton_vertices_;
    std::map<int, int> vertex_level_;
    std::vector<std::vector<int>> level_;
};

}  // namespace ih2
