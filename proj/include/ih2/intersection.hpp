#pragma once

#include <string>
#include <vector>

#include "ih2/chain_complex.hpp"
#include "ih2/filtration.hpp"
#include "ih2/gf2.hpp"
#include "ih2/perversity.hpp"

namespace ih2 {

namespace detail {
inline void require_perversity_range(const FilteredComplex& x, const Perversity& p) {
    if (p.max_codim() < x.ambient_dim())
        throw InputError("perversity covers codimensions up to " +
                         std::to_string(p.max_codim()) + ", the space needs " +
                         std::to_string(x.ambient_dim()));
}
}  // namespace detail

/// Allowability of a single i-simplex: for every codimension c in 2..a the
/// face of s inside X_{a-c} has dimension at most i - c + p(c); an empty
/// intersection satisfies every bound.
inline bool simplex_allowable(const FilteredComplex& x, const Perversity& p, int degree,
                              const Simplex& s) {
    detail::require_perversity_range(x, p);
    if (s.dim() != degree)
        throw InputError("simplex " + s.to_string() + " has dimension " +
                         std::to_string(s.dim()) + ", not " + std::to_string(degree));
    const int a = x.ambient_dim();
    for (int c = 2; c <= a; ++c) {
        const std::size_t m = x.skeleton_vertex_count(s, a - c);
        if (m == 0) continue;
        if (static_cast<int>(m) - 1 > degree - c + p(c)) return false;
    }
    return true;
}

inline std::vector<std::size_t> allowable_simplex_indices(const FilteredComplex& x,
                                                          const Perversity& p, int degree) {
    std::vector<std::size_t> out;
    const auto& level = x.complex().simplices(degree);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (simplex_allowable(x, p, degree, level[i])) out.push_back(i);
    return out;
}

/// The allowable i-simplices in canonical order. Over GF(2) their span is
/// exactly the space of allowable i-chains: a sum of simplices has the
/// union of them as support, so no support can shrink by cancellation.
inline std::vector<Simplex> allowable_simplices(const FilteredComplex& x, const Perversity& p,
                                                int degree) {
    std::vector<Simplex> out;
    for (auto i : allowable_simplex_indices(x, p, degree))
        out.push_back(x.complex().simplices(degree)[i]);
    return out;
}

/// Deterministic basis of IC_i = { allowable i-chains whose boundary is an
/// allowable (i-1)-chain }, as vectors over all i-simplices. Computed as
/// the kernel of the boundary map followed by projection onto the
/// coordinates of the non-allowable (i-1)-simplices.
inline std::vector<BitVec> ic_basis(const FilteredComplex& x, const Perversity& p, int degree) {
    detail::require_perversity_range(x, p);
    const int a = x.ambient_dim();
    if (degree < 0 || degree > a)
        throw InputError("chain degree " + std::to_string(degree) + " outside 0.." +
                         std::to_string(a));
    const SimplicialComplex& k = x.complex();
    const std::size_t n = k.count(degree);
    const auto allow = allowable_simplex_indices(x, p, degree);

    std::vector<std::size_t> blocked_prev;
    if (degree >= 1) {
        const auto allow_prev = allowable_simplex_indices(x, p, degree - 1);
        std::vector<bool> ok(k.count(degree - 1), false);
        for (auto i : allow_prev) ok[i] = true;
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (!ok[i]) blocked_prev.push_back(i);
    }

    GF2Matrix restricted(blocked_prev.size(), allow.size());
    if (!blocked_prev.empty() && !allow.empty()) {
        const GF2Matrix bd = k.boundary_matrix(degree);
        for (std::size_t r = 0; r < blocked_prev.size(); ++r) {
            const BitVec& full_row = bd.row(blocked_prev[r]);
            for (std::size_t j = 0; j < allow.size(); ++j)
                if (full_row.test(allow[j])) restricted.set(r, j);
        }
    }

    std::vector<BitVec> basis;
    for (const auto& kernel_vec : nullspace_basis(restricted)) {
        BitVec chain(n);
        for (auto pos : kernel_vec.ones()) chain.set(allow[pos]);
        basis.push_back(std::move(chain));
    }
    return basis;
}

/// The intersection chain complex in its own bases, together with the
/// basis chains in the coordinates of the underlying complex.
struct ICComplex {
    ChainComplexF2 cc;
    std::vector<std::vector<BitVec>> basis;  // basis[i][b] over the i-simplices
};

inline ICComplex assemble_ic(const FilteredComplex& x, const Perversity& p) {
    const int a = x.ambient_dim();
    const SimplicialComplex& k = x.complex();
    ICComplex ic;
    ic.basis.resize(a + 1);
    for (int i = 0; i <= a; ++i) ic.basis[i] = ic_basis(x, p, i);

    for (int i = 0; i <= a; ++i) {
        const std::size_t m = ic.basis[i].size();
        const std::size_t m_prev = i == 0 ? 0 : ic.basis[i - 1].size();
        GF2Matrix bd(m_prev, m);
        if (i >= 1 && m > 0) {
            const SpanSolver solver(ic.basis[i - 1], k.count(i - 1));
            const GF2Matrix rows = k.boundary_rows(i);
            for (std::size_t j = 0; j < m; ++j) {
                BitVec db(k.count(i - 1));
                for (auto t : ic.basis[i][j].ones()) db ^= rows.row(t);
                const auto coeff = solver.solve(db);
                if (!coeff)
                    throw InternalError("intersection chains are not a subcomplex at degree " +
                                        std::to_string(i));
                for (auto b : coeff->ones()) bd.set(b, j);
            }
        }
        ic.cc.dims.push_back(m);
        ic.cc.boundary.push_back(std::move(bd));
    }
    return ic;
}

}  // namespace ih2
