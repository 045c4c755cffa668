#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ih2/errors.hpp"

namespace ih2 {

/// Perversity: integers p(2), p(3), ..., p(max_codim) with p(2) = 0 and
/// p(c) <= p(c+1) <= p(c)+1. This pins 0 <= p(c) <= c-2, so every valid
/// perversity lies between the zero and the total perversity.
class Perversity {
public:
    Perversity() = default;

    static Perversity from_values(const std::vector<int>& values) {
        if (!values.empty() && values[0] != 0)
            throw InputError("perversity must have p(2) = 0, got p(2) = " +
                             std::to_string(values[0]));
        for (std::size_t i = 1; i < values.size(); ++i) {
            const int c = static_cast<int>(i) + 2;
            if (values[i] < values[i - 1] || values[i] > values[i - 1] + 1)
                throw InputError("perversity growth violated at c=" + std::to_string(c) +
                                 ": p(" + std::to_string(c - 1) + ")=" +
                                 std::to_string(values[i - 1]) + " but p(" +
                                 std::to_string(c) + ")=" + std::to_string(values[i]));
        }
        Perversity p;
        p.vals_ = values;
        return p;
    }

    static Perversity zero(int max_codim) {
        return fill(max_codim, [](int) { return 0; });
    }
    static Perversity total(int max_codim) {
        return fill(max_codim, [](int c) { return c - 2; });
    }
    static Perversity lower_middle(int max_codim) {
        return fill(max_codim, [](int c) { return (c - 2) / 2; });
    }
    static Perversity upper_middle(int max_codim) {
        return fill(max_codim, [](int c) { return (c - 1) / 2; });
    }

    /// Largest codimension with a stored value; 1 when none are stored.
    int max_codim() const { return static_cast<int>(vals_.size()) + 1; }

    int operator()(int c) const {
        if (c < 2 || c > max_codim())
            throw InputError("perversity value p(" + std::to_string(c) +
                             ") requested, stored range is c = 2.." +
                             std::to_string(max_codim()));
        return vals_[c - 2];
    }

    /// Restriction to codimensions 2..max_codim (no extension).
    Perversity restricted(int max_codim) const {
        if (max_codim > this->max_codim())
            throw InternalError("perversity restriction would extend the range");
        Perversity p;
        p.vals_.assign(vals_.begin(), vals_.begin() + std::max(0, max_codim - 1));
        return p;
    }

    bool pointwise_leq(const Perversity& other) const {
        const std::size_t n = std::min(vals_.size(), other.vals_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (vals_[i] > other.vals_[i]) return false;
        return true;
    }

    const std::vector<int>& values() const { return vals_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < vals_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vals_[i]);
        }
        return s + ")";
    }

    bool operator==(const Perversity&) const = default;

private:
    template <typename F>
    static Perversity fill(int max_codim, F f) {
        Perversity p;
        for (int c = 2; c <= max_codim; ++c) p.vals_.push_back(f(c));
        return p;
    }

    std::vector<int> vals_;
};

}  // namespace ih2
