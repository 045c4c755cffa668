#pragma once

#include <string>
#include <vector>

#include "ih2/complex.hpp"
#include "ih2/errors.hpp"
#include "ih2/gf2.hpp"

namespace ih2 {

/// GF(2) chain complex: boundary[i] maps degree i to degree i-1 (rows are
/// the (i-1)-basis, columns the i-basis); boundary[0] has zero rows.
struct ChainComplexF2 {
    std::vector<std::size_t> dims;
    std::vector<GF2Matrix> boundary;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }

    void validate() const {
        if (boundary.size() != dims.size())
            throw InternalError("chain complex: boundary count != degree count");
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const std::size_t expect_rows = i == 0 ? 0 : dims[i - 1];
            if (boundary[i].cols() != dims[i] || boundary[i].rows() != expect_rows)
                throw InternalError("chain complex: boundary " + std::to_string(i) +
                                    " has wrong shape");
        }
        for (std::size_t i = 2; i < dims.size(); ++i)
            if (!(boundary[i - 1] * boundary[i]).is_zero())
                throw InternalError("chain complex: boundary of boundary nonzero at degree " +
                                    std::to_string(i));
    }
};

inline ChainComplexF2 chain_complex(const SimplicialComplex& k) {
    ChainComplexF2 cc;
    for (int d = 0; d <= k.dimension(); ++d) {
        cc.dims.push_back(k.count(d));
        cc.boundary.push_back(k.boundary_matrix(d));
    }
    return cc;
}

}  // namespace ih2
