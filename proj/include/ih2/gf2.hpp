#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ih2/bitvec.hpp"
#include "ih2/errors.hpp"

namespace ih2 {

/// Row-major matrix over GF(2).
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    static GF2Matrix identity(std::size_t n) {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BitVec& row(std::size_t r) { return data_[r]; }
    const BitVec& row(std::size_t r) const { return data_[r]; }

    bool at(std::size_t r, std::size_t c) const { return data_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

    GF2Matrix transposed() const {
        GF2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (auto c : data_[r].ones()) t.set(c, r);
        return t;
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (r.any()) return false;
        return true;
    }

    /// Matrix * column vector; v.size() must equal cols().
    BitVec apply(const BitVec& v) const {
        if (v.size() != cols_)
            throw InternalError("GF2Matrix::apply dimension mismatch");
        BitVec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (data_[r].dot(v)) out.set(r);
        return out;
    }

    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
        if (a.cols_ != b.rows_)
            throw InternalError("GF2Matrix product dimension mismatch");
        GF2Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (auto k : a.data_[r].ones()) out.data_[r] ^= b.data_[k];
        return out;
    }

    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

/// Incremental row-echelon basis. Rows are inserted in caller order and
/// reduced so that each stored row's lowest set bit is its pivot; pivots
/// are distinct. All outcomes are deterministic functions of the input
/// sequence.
class Echelon {
public:
    explicit Echelon(std::size_t width)
        : width_(width), pivot_row_(width, BitVec::npos) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    /// Residue of v after elimination; zero iff v lies in the current span.
    BitVec reduce(BitVec v) const {
        while (true) {
            const std::size_t p = v.lowest_set();
            if (p == BitVec::npos) break;
            const std::size_t j = pivot_row_[p];
            if (j == BitVec::npos) break;
            v ^= rows_[j];
        }
        return v;
    }

    bool contains(const BitVec& v) const { return reduce(v).none(); }

    /// Inserts v if independent of the current rows; returns true when the
    /// rank grew.
    bool insert(BitVec v) {
        v = reduce(std::move(v));
        const std::size_t p = v.lowest_set();
        if (p == BitVec::npos) return false;
        pivot_row_[p] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

private:
    std::size_t width_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivot_row_;  // column -> row index, npos if free
};

/// Echelon basis remembering how each stored row combines the original
/// generators, so that members of the span can be expressed in them.
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<BitVec>& generators, std::size_t width)
        : n_gens_(generators.size()), pivot_row_(width, BitVec::npos) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g].size() != width)
                throw InternalError("SpanSolver generator width mismatch");
            BitVec v = generators[g];
            BitVec c = BitVec::unit(n_gens_, g);
            reduce_tracked(v, c);
            if (v.any()) {
                pivot_row_[v.lowest_set()] = rows_.size();
                rows_.push_back(std::move(v));
                coeffs_.push_back(std::move(c));
            }
        }
    }

    std::size_t rank() const { return rows_.size(); }

    /// Coefficients over the generators expressing v, or nullopt when v is
    /// outside the span.
    std::optional<BitVec> solve(const BitVec& v) const {
        BitVec r = v;
        BitVec c(n_gens_);
        reduce_tracked(r, c);
        if (r.any()) return std::nullopt;
        return c;
    }

private:
    void reduce_tracked(BitVec& v, BitVec& c) const {
        while (true) {
            const std::size_t p = v.lowest_set();
            if (p == BitVec::npos) break;
            const std::size_t j = pivot_row_[p];
            if (j == BitVec::npos) break;
            v ^= rows_[j];
            c ^= coeffs_[j];
        }
    }

    std::size_t n_gens_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> coeffs_;
    std::vector<std::size_t> pivot_row_;
};

/// Dimension of the row space. Rows are processed in input order with
/// lowest-index pivots, so the result is deterministic.
inline std::size_t rank(const GF2Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.rank();
}

struct ReducedRowEchelon {
    std::vector<BitVec> rows;              // sorted by pivot column
    std::vector<std::size_t> pivot_cols;   // ascending
};

inline ReducedRowEchelon reduced_row_echelon(const GF2Matrix& m) {
    Echelon fwd(m.cols());
    std::vector<BitVec> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec v = fwd.reduce(m.row(r));
        if (v.any()) {
            fwd.insert(v);
            pivots.push_back(v.lowest_set());
            rows.push_back(std::move(v));
        }
    }
    // sort rows by pivot column
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    ReducedRowEchelon out;
    for (auto i : order) {
        out.rows.push_back(rows[i]);
        out.pivot_cols.push_back(pivots[i]);
    }
    // back-substitution, highest pivot first; at step j row j is already
    // clean of all pivots above it
    for (std::size_t j = out.rows.size(); j-- > 0;)
        for (std::size_t l = 0; l < j; ++l)
            if (out.rows[l].test(out.pivot_cols[j])) out.rows[l] ^= out.rows[j];
    return out;
}

/// Basis of {v : Mv = 0}, one vector per free column in ascending column
/// order. An empty matrix with n columns yields the n unit vectors.
inline std::vector<BitVec> nullspace_basis(const GF2Matrix& m) {
    const ReducedRowEchelon rre = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rre.pivot_cols) is_pivot[p] = true;
    std::vector<BitVec> basis;
    basis.reserve(m.cols() - rre.pivot_cols.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t j = 0; j < rre.rows.size(); ++j)
            if (rre.rows[j].test(f)) v.set(rre.pivot_cols[j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t span_dim(const std::vector<BitVec>& vecs) {
    if (vecs.empty()) return 0;
    Echelon e(vecs.front().size());
    for (const auto& v : vecs) {
        if (v.size() != vecs.front().size())
            throw InputError("span_dim: vector length mismatch");
        e.insert(v);
    }
    return e.rank();
}

/// True iff v is a GF(2)-linear combination of the basis vectors.
inline bool in_span(const BitVec& v, const std::vector<BitVec>& basis) {
    Echelon e(v.size());
    for (const auto& b : basis) {
        if (b.size() != v.size())
            throw InputError("in_span: vector length mismatch");
        e.insert(b);
    }
    return e.contains(v);
}

/// dim(span U ∩ span V) = dim U + dim V − dim(U ∪ V).
inline std::size_t intersect_dim(const std::vector<BitVec>& u, const std::vector<BitVec>& v) {
    if (u.empty() || v.empty()) return 0;
    const std::size_t width = u.front().size();
    Echelon joint(width);
    Echelon eu(width);
    Echelon ev(width);
    for (const auto& x : u) {
        if (x.size() != width) throw InputError("intersect_dim: vector length mismatch");
        eu.insert(x);
        joint.insert(x);
    }
    for (const auto& x : v) {
        if (x.size() != width) throw InputError("intersect_dim: vector length mismatch");
        ev.insert(x);
        joint.insert(x);
    }
    return eu.rank() + ev.rank() - joint.rank();
}

}  // namespace ih2
