#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "graphstab/fp.hpp"

namespace graphstab {

// Dense row-major matrix over F_p. Entries are always canonical in [0, p).
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, Prime p)
        : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

    static FpMatrix identity(std::size_t n, Prime p) {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
        return m;
    }

    // Builds from integer rows, reducing mod p. All rows must have equal length.
    static FpMatrix from_rows(Prime p, const std::vector<std::vector<std::int64_t>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        FpMatrix m(r, c, p);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw Error("RaggedRows", "row " + std::to_string(i) + " has length " +
                                              std::to_string(rows[i].size()) + ", expected " +
                                              std::to_string(c));
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Prime prime() const { return p_; }
    std::uint32_t p() const { return p_.value(); }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v) { e_[i * cols_ + j] = fp_reduce(v, p()); }

    FpVec row(std::size_t i) const {
        return FpVec(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    FpVec col(std::size_t j) const {
        FpVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_row(std::size_t i, const FpVec& v) {
        for (std::size_t j = 0; j < cols_; ++j) e_[i * cols_ + j] = v[j] % p();
    }

    bool is_zero() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    FpMatrix transpose() const {
        FpMatrix t(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = (*this)(i, j);
        return t;
    }

    FpMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        FpMatrix s(nr, nc, p_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) s.e_[i * nc + j] = (*this)(r0 + i, c0 + j);
        return s;
    }

    // Stacks other below this; column counts must agree.
    FpMatrix vstack(const FpMatrix& other) const {
        detail::require_same_modulus(p_, other.p_);
        if (cols_ != other.cols_)
            throw Error("ShapeMismatch", "vstack of " + std::to_string(cols_) + " and " +
                                             std::to_string(other.cols_) + " columns");
        FpMatrix s(rows_ + other.rows_, cols_, p_);
        s.e_ = e_;
        s.e_.insert(s.e_.end(), other.e_.begin(), other.e_.end());
        return s;
    }

    FpMatrix hstack(const FpMatrix& other) const {
        detail::require_same_modulus(p_, other.p_);
        if (rows_ != other.rows_)
            throw Error("ShapeMismatch", "hstack of " + std::to_string(rows_) + " and " +
                                             std::to_string(other.rows_) + " rows");
        FpMatrix s(rows_, cols_ + other.cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) s.e_[i * s.cols_ + j] = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) s.e_[i * s.cols_ + cols_ + j] = other(i, j);
        }
        return s;
    }

    FpMatrix operator*(const FpMatrix& rhs) const {
        detail::require_same_modulus(p_, rhs.p_);
        if (cols_ != rhs.rows_)
            throw Error("ShapeMismatch", "product of " + shape_string() + " and " + rhs.shape_string());
        FpMatrix out(rows_, rhs.cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < cols_; ++t)
                    acc += static_cast<std::uint64_t>((*this)(i, t)) * rhs(t, j);
                out.e_[i * out.cols_ + j] = static_cast<std::uint32_t>(acc % p());
            }
        return out;
    }

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    // row[target] += scalar * row[source]
    void row_axpy(std::size_t target, std::size_t source, std::uint32_t scalar) {
        std::uint32_t c = scalar % p();
        for (std::size_t j = 0; j < cols_; ++j) {
            std::uint32_t& t = e_[target * cols_ + j];
            t = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(c) * e_[source * cols_ + j]) % p());
        }
    }

    void row_scale(std::size_t target, std::uint32_t scalar) {
        std::uint32_t c = scalar % p();
        if (c == 0) throw Error("ZeroScale", "row scaling by 0 is not invertible");
        for (std::size_t j = 0; j < cols_; ++j)
            e_[target * cols_ + j] = fp_mul_raw(e_[target * cols_ + j], c, p());
    }

    // column vector product: this (r x c) times v (length c)
    FpVec mul_vec(const FpVec& v) const {
        if (v.size() != cols_)
            throw Error("ShapeMismatch", "matrix-vector product of " + shape_string() +
                                             " and length " + std::to_string(v.size()));
        FpVec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                acc += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
            out[i] = static_cast<std::uint32_t>(acc % p());
        }
        return out;
    }

    // row vector product: v (length r) times this (r x c)
    FpVec vec_mul(const FpVec& v) const {
        if (v.size() != rows_)
            throw Error("ShapeMismatch", "vector-matrix product of length " +
                                             std::to_string(v.size()) + " and " + shape_string());
        FpVec out(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                out[j] = static_cast<std::uint32_t>(
                    (out[j] + static_cast<std::uint64_t>(v[i]) * (*this)(i, j)) % p());
        }
        return out;
    }

    std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    std::size_t rows_, cols_;
    Prime p_;
    std::vector<std::uint32_t> e_;
};

struct RrefResult {
    FpMatrix echelon;   // reduced row echelon form of the input
    FpMatrix transform; // invertible, transform * input == echelon
    std::vector<std::size_t> pivots; // pivot columns, increasing
};

// Reduced row echelon form with the row-operation transform tracked on the
// side. Pivot rule: leftmost unresolved column, first nonzero entry scanning
// top to bottom, so the output is reproducible across runs.
inline RrefResult rref(const FpMatrix& m) {
    const std::uint32_t p = m.p();
    FpMatrix a = m;
    FpMatrix t = FpMatrix::identity(m.rows(), m.prime());
    std::vector<std::size_t> pivots;

    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && a(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            // swap rows r and piv as (x,y) -> (x+y,y) -> (x+y,-x) -> (y,-x) -> (y,x),
            // so the tracked transform stays a product of elementary moves
            a.row_axpy(r, piv, 1);
            t.row_axpy(r, piv, 1);
            a.row_axpy(piv, r, p - 1);
            t.row_axpy(piv, r, p - 1);
            a.row_axpy(r, piv, 1);
            t.row_axpy(r, piv, 1);
            a.row_scale(piv, p - 1);
            t.row_scale(piv, p - 1);
        }
        std::uint32_t inv = fp_inv_raw(a(r, col), p);
        if (inv != 1) {
            a.row_scale(r, inv);
            t.row_scale(r, inv);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || a(i, col) == 0) continue;
            std::uint32_t c = fp_neg_raw(a(i, col), p);
            a.row_axpy(i, r, c);
            t.row_axpy(i, r, c);
        }
        pivots.push_back(col);
        ++r;
    }
    return {a, t, pivots};
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

// Trims trailing zero rows, keeping the first `keep` rows.
inline FpMatrix take_rows(const FpMatrix& m, std::size_t keep) {
    return m.submatrix(0, 0, keep, m.cols());
}

// Basis of {v : m v = 0}, one basis vector per row, canonicalized by rref so
// equal kernels compare equal.
inline FpMatrix kernel_basis(const FpMatrix& m) {
    const std::uint32_t p = m.p();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;

    FpMatrix basis(m.cols() - r.pivots.size(), m.cols(), m.prime());
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out, free_col, 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            basis.set(out, r.pivots[i], fp_neg_raw(r.echelon(i, free_col), p));
        ++out;
    }
    RrefResult canon = rref(basis);
    return take_rows(canon.echelon, canon.pivots.size());
}

// Check matrix H with H g^t = 0 for every row g of gen; rank = cols - rank(gen).
// This is the canonical kernel of the map v -> gen v.
inline FpMatrix parity_check(const FpMatrix& gen) { return kernel_basis(gen); }

// Reduces v against the echelon form; empty result means membership.
inline bool row_space_contains(const FpMatrix& a, const FpVec& v) {
    if (v.size() != a.cols())
        throw Error("ShapeMismatch", "vector length " + std::to_string(v.size()) +
                                         " vs " + std::to_string(a.cols()) + " columns");
    const std::uint32_t p = a.p();
    RrefResult r = rref(a);
    FpVec w = v;
    for (auto& x : w) x %= p;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::uint32_t c = w[r.pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] = fp_sub_raw(w[j], fp_mul_raw(c, r.echelon(i, j), p), p);
    }
    return vec_is_zero(w);
}

inline bool row_space_equal(const FpMatrix& a, const FpMatrix& b) {
    detail::require_same_modulus(a.prime(), b.prime());
    if (a.cols() != b.cols())
        throw Error("ShapeMismatch", "row spaces in " + std::to_string(a.cols()) + " vs " +
                                         std::to_string(b.cols()) + " columns");
    RrefResult ra = rref(a);
    RrefResult rb = rref(b);
    return take_rows(ra.echelon, ra.pivots.size()) == take_rows(rb.echelon, rb.pivots.size());
}

} // namespace graphstab
