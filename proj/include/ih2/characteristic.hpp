#pragma once

#include <vector>

#include "ih2/gf2.hpp"
#include "ih2/homology.hpp"
#include "ih2/pseudomanifold.hpp"
#include "ih2/subdivision.hpp"

namespace ih2 {

/// The mod-2 fundamental class: the sum of all top simplices, a cycle
/// exactly because every ridge of a closed pseudomanifold has two top
/// cofaces.
inline BitVec fundamental_class(const SimplicialComplex& k) {
    if (validate_pseudomanifold(k).kind != PseudomanifoldKind::Closed)
        throw InputError("fundamental class requires a closed pseudomanifold");
    BitVec chain(k.count(k.dimension()));
    for (std::size_t i = 0; i < chain.size(); ++i) chain.set(i);
    return chain;
}

/// Combinatorial Stiefel-Whitney homology data: in the first barycentric
/// subdivision K', the degree-i class is the sum of all i-simplices of K'.
/// On a closed triangulated manifold each is a mod-2 cycle representing
/// the degree-i Stiefel-Whitney homology class; "vanishing" records
/// whether it bounds in K'.
struct SWClassSet {
    BarycentricSubdivision subdivision;
    std::vector<BitVec> classes;
    std::vector<bool> is_cycle;
    std::vector<bool> vanishing;
};

inline SWClassSet sw_homology_classes(const SimplicialComplex& k) {
    if (validate_pseudomanifold(k).kind != PseudomanifoldKind::Closed)
        throw InputError("Stiefel-Whitney classes require a closed pseudomanifold");
    SWClassSet out;
    out.subdivision = barycentric_subdivision(k);
    const SimplicialComplex& sd = out.subdivision.complex;
    const int a = sd.dimension();
    for (int i = 0; i <= a; ++i) {
        BitVec w(sd.count(i));
        for (std::size_t j = 0; j < w.size(); ++j) w.set(j);

        bool cycle = true;
        if (i >= 1) {
            const GF2Matrix bd = sd.boundary_matrix(i);
            cycle = bd.apply(w).none();
        }

        bool bounds = false;
        if (w.none()) {
            bounds = true;
        } else if (i < a) {
            const GF2Matrix rows = sd.boundary_rows(i + 1);
            std::vector<BitVec> image;
            image.reserve(rows.rows());
            for (std::size_t r = 0; r < rows.rows(); ++r) image.push_back(rows.row(r));
            bounds = in_span(w, image);
        }

        out.classes.push_back(std::move(w));
        out.is_cycle.push_back(cycle);
        out.vanishing.push_back(bounds);
    }
    return out;
}

/// Top Stiefel-Whitney number of a closed manifold: the Euler
/// characteristic mod 2 (equivalently, the parity of the number of
/// simplices, i.e. the class of w_0 in H_0).
inline int top_sw_number(const SimplicialComplex& k) {
    if (validate_pseudomanifold(k).kind != PseudomanifoldKind::Closed)
        throw InputError("top Stiefel-Whitney number requires a closed pseudomanifold");
    const long chi = k.euler_characteristic();
    return static_cast<int>(((chi % 2) + 2) % 2);
}

/// One-directional bordism obstruction from the data computed here: a
/// nonzero top Stiefel-Whitney number (equivalently a non-bounding w_0)
/// shows the manifold bounds nothing; vanishing data never certifies that
/// it bounds.
struct BordismShadowReport {
    int top_number = 0;
    std::vector<bool> class_is_cycle;
    std::vector<bool> class_vanishing;
    bool obstructed = false;
};

inline BordismShadowReport bordism_shadow_report(const SimplicialComplex& k) {
    BordismShadowReport report;
    report.top_number = top_sw_number(k);
    const SWClassSet sw = sw_homology_classes(k);
    report.class_is_cycle = sw.is_cycle;
    report.class_vanishing = sw.vanishing;
    report.obstructed = report.top_number == 1 || !sw.vanishing[0];
    return report;
}

}  // namespace ih2
