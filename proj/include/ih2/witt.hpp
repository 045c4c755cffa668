#pragma once

#include <string>
#include <vector>

#include "ih2/ih.hpp"
#include "ih2/stratified.hpp"

namespace ih2 {

struct WittEntry {
    int skeleton_index = 0;
    std::size_t component = 0;
    int codimension = 0;  // odd, >= 3
    int half = 0;         // k with codimension = 2k+1
    Simplex representative;
    std::vector<std::size_t> link_f_vector;
    std::size_t link_rank = 0;  // rank IH_half^n(link)
    bool ok = false;
};

struct WittReport {
    bool is_witt = true;  // vacuously true without odd-codimension strata
    std::vector<WittEntry> entries;
    std::vector<std::string> failures;  // one line per nonzero link rank
};

/// For each stratum component of odd codimension c = 2k+1 computes
/// IH_k with the upper middle perversity on the link of a representative
/// simplex, with the induced filtration. The space is Witt when every
/// such rank vanishes.
inline WittReport witt_check(const FilteredComplex& x) {
    WittReport report;
    for (const auto& stratum : strata(x)) {
        if (stratum.codimension < 3 || stratum.codimension % 2 == 0) continue;
        for (std::size_t ci = 0; ci < stratum.components.size(); ++ci) {
            const auto& comp = stratum.components[ci];
            const FilteredComplex link_space = stratum_link(x, comp);
            const int half = (stratum.codimension - 1) / 2;
            const Perversity upper =
                Perversity::upper_middle(std::max(1, link_space.ambient_dim()));
            const HomologyResult link_ih = ih(link_space, upper);

            WittEntry entry;
            entry.skeleton_index = stratum.skeleton_index;
            entry.component = ci;
            entry.codimension = stratum.codimension;
            entry.half = half;
            entry.representative = *comp.representative;
            entry.link_f_vector = link_space.complex().f_vector();
            entry.link_rank = link_ih.ranks[half];
            entry.ok = entry.link_rank == 0;
            if (!entry.ok) {
                report.is_witt = false;
                report.failures.push_back(
                    "codim " + std::to_string(entry.codimension) + " stratum at " +
                    entry.representative.to_string() + ": IH_" + std::to_string(half) +
                    "^n(link) = " + std::to_string(entry.link_rank));
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

struct DualityReport {
    int ambient_dim = 0;
    std::vector<std::size_t> lower_middle_ranks;
    std::vector<std::size_t> upper_middle_ranks;
    bool middle_agreement = false;  // rank IH_i^m == rank IH_i^n for all i
    bool rank_symmetric = false;    // rank IH_i^m == rank IH_{a-i}^m for all i
    bool pass = false;
};

/// Rank-level middle-perversity duality over GF(2) on a closed space:
/// the lower-middle ranks must be symmetric about the middle degree and
/// agree with the upper-middle ranks.
inline DualityReport duality_check(const FilteredComplex& x) {
    if (validate_pseudomanifold(x.complex()).kind != PseudomanifoldKind::Closed)
        throw InputError("duality check requires a closed pseudomanifold");
    const int a = x.ambient_dim();
    DualityReport report;
    report.ambient_dim = a;
    report.lower_middle_ranks = ih(x, Perversity::lower_middle(std::max(1, a))).ranks;
    report.upper_middle_ranks = ih(x, Perversity::upper_middle(std::max(1, a))).ranks;
    report.middle_agreement = report.lower_middle_ranks == report.upper_middle_ranks;
    report.rank_symmetric = true;
    for (int i = 0; i <= a; ++i)
        if (report.lower_middle_ranks[i] != report.lower_middle_ranks[a - i])
            report.rank_symmetric = false;
    report.pass = report.middle_agreement && report.rank_symmetric;
    return report;
}

}  // namespace ih2
