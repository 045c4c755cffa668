#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "ih2/errors.hpp"
#include "ih2/gf2.hpp"
#include "ih2/simplex.hpp"

namespace ih2 {

/// Finite abstract simplicial complex, stored as the full face closure of
/// its facets with one lexicographically sorted list of simplices per
/// dimension. The per-dimension position of a simplex is the canonical
/// index used by all boundary matrices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the empty complex, dimension() == -1

    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets) {
        if (facets.empty()) throw InputError("complex needs at least one facet");
        std::vector<Simplex> simplices;
        simplices.reserve(facets.size());
        for (const auto& f : facets) {
            if (f.empty()) throw InputError("empty facet");
            simplices.emplace_back(f);
        }
        return from_simplices(simplices);
    }

    /// Face closure of an arbitrary simplex set.
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices) {
        SimplicialComplex k;
        if (simplices.empty()) return k;
        int dim = 0;
        for (const auto& s : simplices) dim = std::max(dim, s.dim());
        std::vector<std::set<std::vector<int>>> closure(dim + 1);
        for (const auto& s : simplices) {
            const auto& vs = s.vertices();
            const std::size_t n = vs.size();
            // all nonempty subsets
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
                closure[sub.size() - 1].insert(std::move(sub));
            }
        }
        k.by_dim_.resize(dim + 1);
        for (int d = 0; d <= dim; ++d) {
            k.by_dim_[d].reserve(closure[d].size());
            for (const auto& vs : closure[d]) k.by_dim_[d].push_back(Simplex(vs));
        }
        k.compute_facets();
        return k;
    }

    bool empty() const { return by_dim_.empty(); }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<Simplex>& simplices(int d) const {
        static const std::vector<Simplex> none;
        if (d < 0 || d > dimension()) return none;
        return by_dim_[d];
    }

    std::size_t count(int d) const { return simplices(d).size(); }

    std::size_t total_simplices() const {
        std::size_t n = 0;
        for (const auto& level : by_dim_) n += level.size();
        return n;
    }

    bool contains(const Simplex& s) const {
        const auto& level = simplices(s.dim());
        return std::binary_search(level.begin(), level.end(), s);
    }

    std::size_t index_of(const Simplex& s) const {
        const auto& level = simplices(s.dim());
        const auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s)
            throw InputError("simplex " + s.to_string() + " not in complex");
        return static_cast<std::size_t>(it - level.begin());
    }

    /// Maximal simplices, in (dimension, lex) order.
    const std::vector<Simplex>& facets() const { return facets_; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(count(0));
        for (const auto& v : simplices(0)) out.push_back(v.vertices().front());
        return out;
    }

    long euler_characteristic() const {
        long chi = 0;
        for (int d = 0; d <= dimension(); ++d)
            chi += (d % 2 == 0) ? static_cast<long>(count(d)) : -static_cast<long>(count(d));
        return chi;
    }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (int d = 0; d <= dimension(); ++d) f.push_back(count(d));
        return f;
    }

    /// One row per d-simplex holding its boundary over the (d-1)-simplices.
    GF2Matrix boundary_rows(int d) const {
        const std::size_t nd = count(d);
        const std::size_t nprev = d >= 1 ? count(d - 1) : 0;
        GF2Matrix m(nd, nprev);
        if (d < 1) return m;
        for (std::size_t j = 0; j < nd; ++j)
            for (const auto& f : by_dim_[d][j].facets()) m.set(j, index_of(f));
        return m;
    }

    /// Boundary operator C_d -> C_{d-1}: rows indexed by (d-1)-simplices,
    /// columns by d-simplices. For d == 0 the matrix has zero rows.
    GF2Matrix boundary_matrix(int d) const { return boundary_rows(d).transposed(); }

private:
    void compute_facets() {
        facets_.clear();
        const int dim = dimension();
        for (int d = 0; d <= dim; ++d) {
            std::set<Simplex> covered;
            if (d < dim)
                for (const auto& s : by_dim_[d + 1])
                    for (const auto& f : s.facets()) covered.insert(f);
            for (const auto& s : by_dim_[d])
                if (d == dim || !covered.count(s)) facets_.push_back(s);
        }
        std::sort(facets_.begin(), facets_.end(), dim_lex_less);
    }

    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<Simplex> facets_;
};

/// Smallest vertex id unused by the complex.
inline int next_vertex_id(const SimplicialComplex& k) {
    int next = 0;
    for (int v : k.vertices()) next = std::max(next, v + 1);
    return next;
}

/// link(K, s) = { t : t ∩ s = ∅ and t ∪ s ∈ K }. May be empty.
inline SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    if (!k.contains(s)) throw InputError("link: simplex " + s.to_string() + " not in complex");
    std::vector<Simplex> members;
    for (int d = s.dim() + 1; d <= k.dimension(); ++d)
        for (const auto& coface : k.simplices(d))
            if (s.is_face_of(coface)) members.push_back(coface.minus(s));
    return SimplicialComplex::from_simplices(members);
}

/// Join with one fresh apex (max vertex id + 1).
inline SimplicialComplex cone(const SimplicialComplex& k) {
    if (k.empty()) throw InputError("cone over the empty complex");
    const int apex = next_vertex_id(k);
    std::vector<Simplex> facets;
    for (const auto& f : k.facets()) facets.push_back(f.joined_with(apex));
    return SimplicialComplex::from_simplices(facets);
}

/// Join with two fresh apexes that are not joined to each other.
inline SimplicialComplex suspension(const SimplicialComplex& k) {
    if (k.empty()) throw InputError("suspension of the empty complex");
    const int north = next_vertex_id(k);
    const int south = north + 1;
    std::vector<Simplex> facets;
    for (const auto& f : k.facets()) {
        facets.push_back(f.joined_with(north));
        facets.push_back(f.joined_with(south));
    }
    return SimplicialComplex::from_simplices(facets);
}

}  // namespace ih2
