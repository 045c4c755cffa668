#pragma once

#include <string>
#include <vector>

#include "ih2/complex.hpp"

namespace ih2 {

enum class PseudomanifoldKind { Closed, WithBoundary, NotPseudomanifold };

inline const char* to_string(PseudomanifoldKind k) {
    switch (k) {
        case PseudomanifoldKind::Closed: return "closed";
        case PseudomanifoldKind::WithBoundary: return "with_boundary";
        default: return "not_pseudomanifold";
    }
}

struct PseudomanifoldReport {
    bool is_pure = false;
    PseudomanifoldKind kind = PseudomanifoldKind::NotPseudomanifold;
    /// (a-1)-simplices lying in exactly one a-simplex.
    std::vector<Simplex> boundary_facets;
    /// Maximal simplices below the top dimension, and ridges in three or
    /// more top simplices.
    std::vector<Simplex> offending;
};

/// Checks purity (every simplex is a face of a top-dimensional one) and
/// counts top cofaces of each ridge: all 2 -> closed, 1 or 2 -> boundary.
inline PseudomanifoldReport validate_pseudomanifold(const SimplicialComplex& k) {
    PseudomanifoldReport report;
    const int a = k.dimension();
    if (a < 0) return report;

    report.is_pure = true;
    for (const auto& f : k.facets())
        if (f.dim() < a) {
            report.is_pure = false;
            report.offending.push_back(f);
        }

    bool counts_ok = true;
    if (a >= 1) {
        std::vector<std::size_t> cofaces(k.count(a - 1), 0);
        for (const auto& top : k.simplices(a))
            for (const auto& ridge : top.facets()) ++cofaces[k.index_of(ridge)];
        for (std::size_t r = 0; r < cofaces.size(); ++r) {
            if (cofaces[r] == 1)
                report.boundary_facets.push_back(k.simplices(a - 1)[r]);
            else if (cofaces[r] > 2) {
                counts_ok = false;
                report.offending.push_back(k.simplices(a - 1)[r]);
            }
            // a ridge in no top simplex is itself maximal, caught by purity
        }
    }

    if (!report.is_pure || !counts_ok)
        report.kind = PseudomanifoldKind::NotPseudomanifold;
    else if (report.boundary_facets.empty())
        report.kind = PseudomanifoldKind::Closed;
    else
        report.kind = PseudomanifoldKind::WithBoundary;
    return report;
}

inline bool is_closed_pseudomanifold(const SimplicialComplex& k) {
    return validate_pseudomanifold(k).kind == PseudomanifoldKind::Closed;
}

}  // namespace ih2
