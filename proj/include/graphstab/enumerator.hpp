#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphstab/fp.hpp"
#include "graphstab/matrix.hpp"
#include "graphstab/symplectic.hpp"

namespace graphstab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// Histogram of symplectic weights over a whole code: coeffs[w] counts the
// codewords with exactly w non-identity coordinates.
struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<std::uint64_t> coeffs; // length n + 1

    friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

namespace detail {

// p^dim if it stays within the budget, otherwise throws with the required count.
inline std::uint64_t checked_span_size(std::uint32_t p, std::size_t dim, std::uint64_t budget,
                                       const char* who) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > budget / p)
            throw Error("BudgetExceeded", std::string(who) + " needs p^" + std::to_string(dim) +
                                              " codewords, budget is " + std::to_string(budget));
        total *= p;
    }
    if (total > budget)
        throw Error("BudgetExceeded", std::string(who) + " needs " + std::to_string(total) +
                                          " codewords, budget is " + std::to_string(budget));
    return total;
}

} // namespace detail

// Exhaustive span walk. Coefficient vectors advance odometer-style; each step
// increments one digit and wraps the lower ones, and every digit change is a
// single generator-row addition to the running codeword (a wrap from p-1 to 0
// is the same as adding the row once more). Total work is under 2 p^dim row
// additions.
inline WeightEnumerator weight_distribution(const SymplecticCode& c,
                                            std::uint64_t budget = kDefaultEnumerationBudget) {
    const std::uint32_t p = c.p();
    const std::size_t dim = c.dim();
    const std::size_t n = c.n();
    std::uint64_t total = detail::checked_span_size(p, dim, budget, "weight_distribution");

    WeightEnumerator w;
    w.n = n;
    w.coeffs.assign(n + 1, 0);

    FpVec word(2 * n, 0);
    std::vector<std::uint32_t> coeff(dim, 0);
    w.coeffs[0] = 1; // zero coefficient vector
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (coeff[i] == p - 1) {
            coeff[i] = 0;
            vec_add(word, c.generator().row(i), 1, p);
            ++i;
        }
        ++coeff[i];
        vec_add(word, c.generator().row(i), 1, p);
        ++w.coeffs[symplectic_weight(word)];
    }
    return w;
}

// Minimum distance of the stabilizer code described by a self-orthogonal c:
// the least weight in dual \ code when the code is proper, and the least
// nonzero weight of c itself in the self-dual (k = 0) case.
inline std::size_t min_distance(const SymplecticCode& c,
                                std::uint64_t budget = kDefaultEnumerationBudget) {
    if (!c.is_self_orthogonal())
        throw Error("NotSelfOrthogonal", "distance convention requires code <= dual");
    WeightEnumerator wc = weight_distribution(c, budget);
    if (c.dim() == c.n()) {
        for (std::size_t w = 1; w <= wc.n; ++w)
            if (wc.coeffs[w] > 0) return w;
        throw Error("InternalError", "self-dual code with no nonzero codeword");
    }
    WeightEnumerator wd = weight_distribution(symp_dual(c), budget);
    for (std::size_t w = 1; w <= wd.n; ++w)
        if (wd.coeffs[w] > wc.coeffs[w]) return w;
    throw Error("InternalError", "dual contains no codeword outside the code");
}

// ---------------------------------------------------------------------------
// GF(4) view (p = 2 only)

// Elements encoded 0..3 as c0 + c1*alpha with alpha^2 = alpha + 1:
// 0 -> 0, 1 -> 1, 2 -> alpha, 3 -> alpha^2.
struct Gf4Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> e;

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    friend bool operator==(const Gf4Matrix& a, const Gf4Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

inline std::uint8_t gf4_mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t a0 = a & 1, a1 = (a >> 1) & 1;
    std::uint8_t b0 = b & 1, b1 = (b >> 1) & 1;
    std::uint8_t c0 = (a0 & b0) ^ (a1 & b1);
    std::uint8_t c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return static_cast<std::uint8_t>(c0 | (c1 << 1));
}

inline std::uint8_t gf4_inv(std::uint8_t a) {
    if (a == 0) throw Error("ZeroInverse", "inverse of 0 in GF(4)");
    return a == 1 ? 1 : (a == 2 ? 3 : 2); // alpha * alpha^2 = 1
}

inline std::string gf4_token(std::uint8_t v) {
    static const char* tok[4] = {"0", "1", "a", "a2"};
    return tok[v & 3];
}

// Coordinatewise (x, z) -> x + alpha z; symplectic weight becomes GF(4)
// Hamming weight.
inline Gf4Matrix to_gf4(const SymplecticCode& c) {
    if (c.p() != 2)
        throw Error("WrongCharacteristic", "GF(4) view requires p = 2, got p = " +
                                               std::to_string(c.p()));
    const std::size_t n = c.n();
    Gf4Matrix m;
    m.rows = c.dim();
    m.cols = n;
    m.e.resize(m.rows * n);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.e[i * n + j] =
                static_cast<std::uint8_t>(c.generator()(i, j) | (c.generator()(i, n + j) << 1));
    return m;
}

// Rank over GF(4); a strictly larger value than the F_2 dimension of the
// row set would be impossible, equality with row count means the rows are
// GF(4)-independent.
inline std::size_t gf4_rank(Gf4Matrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t piv = r;
        while (piv < m.rows && m.e[piv * m.cols + col] == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            std::swap(m.e[r * m.cols + j], m.e[piv * m.cols + j]);
        std::uint8_t inv = gf4_inv(m.e[r * m.cols + col]);
        for (std::size_t j = 0; j < m.cols; ++j)
            m.e[r * m.cols + j] = gf4_mul(m.e[r * m.cols + j], inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            std::uint8_t f = m.e[i * m.cols + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                m.e[i * m.cols + j] ^= gf4_mul(f, m.e[r * m.cols + j]);
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// MacWilliams transform

// Dual enumerator of an additive code of size p^dim whose coordinates carry
// the alphabet of size q = p^2 (an X and a Z exponent each):
//   dual[w'] = p^-dim * sum_w coeffs[w] * K_{w'}(w)
// with Krawtchouk polynomials for (n, q). Non-integral output means the
// input was not the enumerator of such a code.
inline WeightEnumerator macwilliams_dual(const WeightEnumerator& w, std::size_t n,
                                         std::uint32_t p, std::size_t dim) {
    if (w.n != n || w.coeffs.size() != n + 1)
        throw Error("ShapeMismatch", "enumerator length does not match n");
    using Wide = __int128;
    const Wide q = static_cast<Wide>(p) * p;

    // Pascal triangle up to n
    std::vector<std::vector<Wide>> ch(n + 1, std::vector<Wide>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        ch[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0);
    }

    Wide size = 1;
    for (std::size_t i = 0; i < dim; ++i) size *= p;

    WeightEnumerator out;
    out.n = n;
    out.coeffs.assign(n + 1, 0);
    for (std::size_t wp = 0; wp <= n; ++wp) {
        Wide acc = 0;
        for (std::size_t wt = 0; wt <= n; ++wt) {
            if (w.coeffs[wt] == 0) continue;
            // K_{wp}(wt) = sum_j (-1)^j (q-1)^{wp-j} C(wt, j) C(n-wt, wp-j)
            Wide k = 0;
            for (std::size_t j = 0; j <= wp && j <= wt; ++j) {
                if (wp - j > n - wt) continue;
                Wide term = ch[wt][j] * ch[n - wt][wp - j];
                for (std::size_t e = 0; e < wp - j; ++e) term *= q - 1;
                k += (j % 2 == 0) ? term : -term;
            }
            acc += static_cast<Wide>(w.coeffs[wt]) * k;
        }
        if (acc % size != 0 || acc < 0)
            throw Error("InconsistentEnumerator",
                        "transform is not a nonnegative integer at weight " + std::to_string(wp));
        out.coeffs[wp] = static_cast<std::uint64_t>(acc / size);
    }
    return out;
}

// Sparse two-variable polynomial, lowest weight first, e.g.
// "x^7 + 21*x^3*y^4 + 42*x*y^6".
inline std::string to_polynomial(const WeightEnumerator& w) {
    std::string out;
    auto var = [](const char* name, std::size_t e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return name;
        return std::string(name) + "^" + std::to_string(e);
    };
    for (std::size_t wt = 0; wt <= w.n; ++wt) {
        if (w.coeffs[wt] == 0) continue;
        std::string term;
        if (w.coeffs[wt] != 1 || wt == 0 && w.n == 0) term = std::to_string(w.coeffs[wt]);
        for (const std::string& v : {var("x", w.n - wt), var("y", wt)}) {
            if (v.empty()) continue;
            if (!term.empty()) term += "*";
            term += v;
        }
        if (term.empty()) term = "1";
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace graphstab
