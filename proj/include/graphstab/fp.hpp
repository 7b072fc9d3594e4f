#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphstab/error.hpp"

namespace graphstab {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// The modulus of a prime field. Restricted to p < 2^16 so that products of
// canonical representatives fit in 64-bit intermediates without tricks.
class Prime {
public:
    explicit Prime(std::uint32_t p) : p_(p) {
        if (p >= (1u << 16))
            throw Error("PrimeTooLarge", "modulus " + std::to_string(p) + " exceeds 2^16");
        if (!is_prime(p))
            throw Error("NotPrime", std::to_string(p) + " is not prime");
    }

    std::uint32_t value() const { return p_; }

    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
    friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

// Canonical representative in [0, p) of an arbitrary signed integer.
inline std::uint32_t fp_reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t fp_add_raw(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub_raw(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_mul_raw(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_neg_raw(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

// Inverse by extended Euclid; requires a != 0.
inline std::uint32_t fp_inv_raw(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0)
        throw Error("ZeroInverse", "0 has no inverse mod " + std::to_string(p));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return fp_reduce(t, p);
}

inline std::uint32_t fp_pow_raw(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

// A field element pinned to its modulus. Always canonical.
struct FpElem {
    std::uint32_t value;
    Prime modulus;

    FpElem(std::int64_t v, Prime p) : value(fp_reduce(v, p.value())), modulus(p) {}

    friend bool operator==(const FpElem& a, const FpElem& b) {
        return a.modulus == b.modulus && a.value == b.value;
    }
};

namespace detail {
inline void require_same_modulus(Prime a, Prime b) {
    if (a != b)
        throw Error("ModulusMismatch", "p=" + std::to_string(a.value()) +
                                           " vs p=" + std::to_string(b.value()));
}
} // namespace detail

inline FpElem fp_add(FpElem a, FpElem b) {
    detail::require_same_modulus(a.modulus, b.modulus);
    return {fp_add_raw(a.value, b.value, a.modulus.value()), a.modulus};
}

inline FpElem fp_sub(FpElem a, FpElem b) {
    detail::require_same_modulus(a.modulus, b.modulus);
    return {fp_sub_raw(a.value, b.value, a.modulus.value()), a.modulus};
}

inline FpElem fp_mul(FpElem a, FpElem b) {
    detail::require_same_modulus(a.modulus, b.modulus);
    return {fp_mul_raw(a.value, b.value, a.modulus.value()), a.modulus};
}

inline FpElem fp_neg(FpElem a) {
    return {fp_neg_raw(a.value, a.modulus.value()), a.modulus};
}

inline FpElem fp_inv(FpElem a) {
    return {fp_inv_raw(a.value, a.modulus.value()), a.modulus};
}

// Row/column vectors over F_p are plain canonical-value vectors; the modulus
// travels alongside in whatever structure owns them.
using FpVec = std::vector<std::uint32_t>;

inline std::uint32_t dot_raw(const FpVec& u, const FpVec& v, std::uint32_t p) {
    if (u.size() != v.size())
        throw Error("LengthMismatch", "dot product of lengths " +
                                          std::to_string(u.size()) + " and " +
                                          std::to_string(v.size()));
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        acc += static_cast<std::uint64_t>(u[i]) * v[i];
    return static_cast<std::uint32_t>(acc % p);
}

inline FpVec vec_add(const FpVec& u, const FpVec& v, std::uint32_t p) {
    if (u.size() != v.size())
        throw Error("LengthMismatch", "vector sum of unequal lengths");
    FpVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = fp_add_raw(u[i], v[i], p);
    return w;
}

inline FpVec vec_scale(const FpVec& u, std::uint32_t c, std::uint32_t p) {
    FpVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = fp_mul_raw(u[i], c % p, p);
    return w;
}

inline bool vec_is_zero(const FpVec& u) {
    for (auto x : u)
        if (x) return false;
    return true;
}

} // namespace graphstab
