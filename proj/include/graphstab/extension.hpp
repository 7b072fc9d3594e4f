#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphstab/fp.hpp"
#include "graphstab/matrix.hpp"

namespace graphstab {

namespace detail {

// Polynomials over F_p, low-degree coefficient first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_trim(c);
}

// Remainder of a mod f; f must be nonzero.
inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    a = poly_trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = fp_inv_raw(f.back(), p);
    while (a.size() > df) {
        std::uint32_t c = fp_mul_raw(a.back(), lead_inv, p);
        std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = fp_sub_raw(a[shift + i], fp_mul_raw(c, f[i], p), p);
        a = poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly acc = {1};
    base = poly_mod(base, f, p);
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

// f (monic-normalized, degree m) is irreducible over F_p iff it shares no
// factor with x^(p^d) - x for d <= m/2. Covers every m up to 4.
inline bool poly_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t q = 1;
        for (std::size_t i = 0; i < d; ++i) q *= p;
        Poly xq = poly_powmod({0, 1}, q, f, p); // x^(p^d) mod f
        // xq - x
        if (xq.size() < 2) xq.resize(2, 0);
        xq[1] = fp_sub_raw(xq[1], 1, p);
        xq = poly_trim(xq);
        Poly g = poly_gcd(f, xq, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// Frobenius trace of the residue class `a`: sum of a^(p^i) for i < m.
// The result lies in the prime field, i.e. reduces to a constant.
inline std::uint32_t field_trace(const Poly& a, const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    Poly cur = poly_mod(a, f, p);
    Poly acc(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) acc[j] = fp_add_raw(acc[j], cur[j], p);
        cur = poly_powmod(cur, p, f, p);
    }
    acc = poly_trim(acc);
    if (acc.size() > 1)
        throw Error("DegenerateForm", "trace did not land in the prime field");
    return acc.empty() ? 0 : acc[0];
}

} // namespace detail

// A basis presentation of F_{p^m} over F_p together with the symmetric
// non-degenerate Gram matrix that defines the bicharacter on the alphabet.
struct ExtensionBasis {
    Prime p;
    std::size_t degree;
    FpMatrix gram;

    ExtensionBasis(Prime p_, FpMatrix gram_)
        : p(p_), degree(gram_.rows()), gram(std::move(gram_)) {
        if (gram.rows() != gram.cols())
            throw Error("ShapeMismatch", "gram matrix must be square");
        if (gram.prime() != p)
            throw Error("ModulusMismatch", "gram matrix modulus differs from p");
        for (std::size_t i = 0; i < degree; ++i)
            for (std::size_t j = i + 1; j < degree; ++j)
                if (gram(i, j) != gram(j, i))
                    throw Error("AsymmetricGram", "gram matrix must be symmetric");
        if (rank(gram) != degree)
            throw Error("DegenerateForm", "gram matrix must be non-degenerate");
    }
};

// Gram matrix Tr(b_i b_j) of the field trace form in the polynomial basis
// {1, x, ..., x^(m-1)} of F_p[x]/(field_def). This is the default symmetric
// non-degenerate bicharacter matrix; callers may substitute their own.
inline ExtensionBasis trace_gram(Prime p, std::size_t m,
                                 const std::vector<std::int64_t>& field_def) {
    if (m < 1 || m > 4)
        throw Error("UnsupportedDegree", "extension degree must be in [1, 4]");
    if (m == 1) {
        FpMatrix g(1, 1, p);
        g.set(0, 0, 1);
        return ExtensionBasis(p, g);
    }
    if (field_def.size() != m + 1)
        throw Error("ShapeMismatch", "field polynomial needs " + std::to_string(m + 1) +
                                         " coefficients, got " + std::to_string(field_def.size()));
    detail::Poly f(field_def.size());
    for (std::size_t i = 0; i < field_def.size(); ++i) f[i] = fp_reduce(field_def[i], p.value());
    if (f.back() == 0)
        throw Error("ShapeMismatch", "field polynomial has zero leading coefficient");
    // normalize monic
    std::uint32_t inv = fp_inv_raw(f.back(), p.value());
    for (auto& c : f) c = fp_mul_raw(c, inv, p.value());
    if (!detail::poly_irreducible(f, p.value()))
        throw Error("ReduciblePolynomial", "field polynomial is reducible over F_" +
                                               std::to_string(p.value()));

    FpMatrix g(m, m, p);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            detail::Poly prod(i + j + 1, 0);
            prod[i + j] = 1; // x^i * x^j
            std::uint32_t t = detail::field_trace(prod, f, p.value());
            g.set(i, j, t);
            g.set(j, i, t);
        }
    if (rank(g) != m)
        throw Error("DegenerateForm", "trace form is degenerate"); // cannot happen: separable
    return ExtensionBasis(p, g);
}

// A symbol of F_{p^m} written as its m basis coefficients; a word is a
// symbol sequence.
using ExtSymbol = FpVec;
using ExtVec = std::vector<ExtSymbol>;

// Expands each symbol into its m consecutive prime-field coordinates,
// preserving order.
inline FpVec flatten_vector(const ExtVec& v, const ExtensionBasis& basis) {
    FpVec out;
    out.reserve(v.size() * basis.degree);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].size() != basis.degree)
            throw Error("ShapeMismatch", "symbol " + std::to_string(i) + " has " +
                                             std::to_string(v[i].size()) + " coefficients, expected " +
                                             std::to_string(basis.degree));
        for (auto c : v[i]) out.push_back(c % basis.p.value());
    }
    return out;
}

} // namespace graphstab
