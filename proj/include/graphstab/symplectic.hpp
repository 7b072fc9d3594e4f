#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "graphstab/fp.hpp"
#include "graphstab/matrix.hpp"

namespace graphstab {

// A length-2n vector split into X and Z exponent parts.
struct SymplecticVector {
    FpVec a; // X part
    FpVec d; // Z part
    Prime p;

    SymplecticVector(FpVec a_, FpVec d_, Prime p_)
        : a(std::move(a_)), d(std::move(d_)), p(p_) {
        if (a.size() != d.size())
            throw Error("LengthMismatch", "X and Z parts have lengths " +
                                              std::to_string(a.size()) + " and " +
                                              std::to_string(d.size()));
    }

    std::size_t n() const { return a.size(); }
};

// <u.a, v.d> - <v.a, u.d>; vanishes exactly when the corresponding operators commute.
inline FpElem symp_inner(const SymplecticVector& u, const SymplecticVector& v) {
    detail::require_same_modulus(u.p, v.p);
    if (u.n() != v.n())
        throw Error("LengthMismatch", "symplectic vectors of lengths " +
                                          std::to_string(u.n()) + " and " + std::to_string(v.n()));
    std::uint32_t p = u.p.value();
    return {static_cast<std::int64_t>(
                fp_sub_raw(dot_raw(u.a, v.d, p), dot_raw(v.a, u.d, p), p)),
            u.p};
}

// Same form on packed (X|Z) rows of length 2n.
inline std::uint32_t symp_inner_raw(const FpVec& u, const FpVec& v, std::uint32_t p) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw Error("LengthMismatch", "packed symplectic vectors must share an even length");
    std::size_t n = u.size() / 2;
    std::uint64_t pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pos += static_cast<std::uint64_t>(u[i]) * v[n + i];
        neg += static_cast<std::uint64_t>(v[i]) * u[n + i];
    }
    return fp_sub_raw(static_cast<std::uint32_t>(pos % p), static_cast<std::uint32_t>(neg % p), p);
}

// Number of coordinates i with (a_i, d_i) != (0, 0).
inline std::size_t symplectic_weight(const FpVec& v) {
    std::size_t n = v.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] != 0 || v[n + i] != 0) ++w;
    return w;
}

// An F_p-linear subspace of F_p^{2n} presented by its canonical (rref) basis.
// Columns [0, n) hold the X part, [n, 2n) the Z part.
class SymplecticCode {
public:
    SymplecticCode(Prime p, std::size_t n, const FpMatrix& spanning)
        : p_(p), n_(n), gen_(canonicalize(p, n, spanning)) {}

    Prime prime() const { return p_; }
    std::uint32_t p() const { return p_.value(); }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return gen_.rows(); }
    const FpMatrix& generator() const { return gen_; }

    SymplecticVector row_vector(std::size_t i) const {
        FpVec r = gen_.row(i);
        return {FpVec(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n_)),
                FpVec(r.begin() + static_cast<std::ptrdiff_t>(n_), r.end()), p_};
    }

    bool contains(const FpVec& v) const { return row_space_contains(gen_, v); }

    bool is_self_orthogonal() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j)
                if (symp_inner_raw(gen_.row(i), gen_.row(j), p()) != 0) return false;
        return true;
    }

    friend bool operator==(const SymplecticCode& a, const SymplecticCode& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.gen_ == b.gen_;
    }

private:
    static FpMatrix canonicalize(Prime p, std::size_t n, const FpMatrix& spanning) {
        detail::require_same_modulus(p, spanning.prime());
        if (spanning.cols() != 2 * n)
            throw Error("ShapeMismatch", "generator has " + std::to_string(spanning.cols()) +
                                             " columns, expected " + std::to_string(2 * n));
        RrefResult r = rref(spanning);
        return take_rows(r.echelon, r.pivots.size());
    }

    Prime p_;
    std::size_t n_;
    FpMatrix gen_;
};

// Transform each row g of gen into (g.d | -g.a); the kernel of the result is
// the symplectic dual.
inline FpMatrix symplectic_twist(const FpMatrix& gen, std::size_t n) {
    FpMatrix t(gen.rows(), gen.cols(), gen.prime());
    for (std::size_t i = 0; i < gen.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t.set(i, j, gen(i, n + j));
            t.set(i, n + j, fp_neg_raw(gen(i, j), gen.p()));
        }
    return t;
}

inline SymplecticCode symp_dual(const SymplecticCode& c) {
    if (c.dim() == 0) {
        FpMatrix full = FpMatrix::identity(2 * c.n(), c.prime());
        return SymplecticCode(c.prime(), c.n(), full);
    }
    FpMatrix dual = kernel_basis(symplectic_twist(c.generator(), c.n()));
    return SymplecticCode(c.prime(), c.n(), dual);
}

// ---------------------------------------------------------------------------
// Isometry transcripts

// row[target] += scalar * row[source]
struct RowOp {
    std::size_t target, source;
    std::uint32_t scalar;
};

struct RowScale {
    std::size_t target;
    std::uint32_t scalar; // nonzero
};

// Coordinate reordering; new coordinate j is old coordinate perm[j].
struct ColPerm {
    std::vector<std::size_t> perm;
};

// (x_i, z_i) -> (a x_i + b z_i, c x_i + d z_i) in every row, with ad - bc = 1.
struct LocalSp {
    std::size_t coord;
    std::array<std::uint32_t, 4> m; // row-major [[a, b], [c, d]]
};

using Move = std::variant<RowOp, RowScale, ColPerm, LocalSp>;

// Ordered record of every move applied while normalizing a code. Row moves
// act on generating matrices; ColPerm/LocalSp are the isometries of the
// symplectic space itself (they preserve symplectic inner products and
// symplectic weight).
struct IsometryTranscript {
    Prime p;
    std::size_t n;
    std::vector<Move> moves;
};

namespace detail {

inline void check_localsp(const LocalSp& m, std::uint32_t p) {
    std::uint32_t det = fp_sub_raw(fp_mul_raw(m.m[0], m.m[3], p), fp_mul_raw(m.m[1], m.m[2], p), p);
    if (det != 1)
        throw Error("NotSymplectic", "local 2x2 move must have determinant 1");
}

} // namespace detail

// Applies one move to a generating matrix with 2n columns. Row moves require
// their indices to exist in this matrix.
inline void apply_move(FpMatrix& gen, const Move& move, std::size_t n) {
    const std::uint32_t p = gen.p();
    if (gen.cols() != 2 * n)
        throw Error("ShapeMismatch", "move on " + std::to_string(n) + " coordinates vs " +
                                         gen.shape_string() + " matrix");
    if (const auto* r = std::get_if<RowOp>(&move)) {
        if (r->target >= gen.rows() || r->source >= gen.rows())
            throw Error("ShapeMismatch", "row move index out of range");
        gen.row_axpy(r->target, r->source, r->scalar);
    } else if (const auto* s = std::get_if<RowScale>(&move)) {
        if (s->target >= gen.rows())
            throw Error("ShapeMismatch", "row move index out of range");
        gen.row_scale(s->target, s->scalar);
    } else if (const auto* c = std::get_if<ColPerm>(&move)) {
        if (c->perm.size() != n)
            throw Error("ShapeMismatch", "permutation of wrong size");
        FpMatrix out = gen;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t src = c->perm[j];
            for (std::size_t i = 0; i < gen.rows(); ++i) {
                out.set(i, j, gen(i, src));
                out.set(i, n + j, gen(i, n + src));
            }
        }
        gen = out;
    } else if (const auto* l = std::get_if<LocalSp>(&move)) {
        detail::check_localsp(*l, p);
        if (l->coord >= n) throw Error("ShapeMismatch", "coordinate out of range");
        for (std::size_t i = 0; i < gen.rows(); ++i) {
            std::uint32_t x = gen(i, l->coord);
            std::uint32_t z = gen(i, n + l->coord);
            gen.set(i, l->coord,
                    fp_add_raw(fp_mul_raw(l->m[0], x, p), fp_mul_raw(l->m[1], z, p), p));
            gen.set(i, n + l->coord,
                    fp_add_raw(fp_mul_raw(l->m[2], x, p), fp_mul_raw(l->m[3], z, p), p));
        }
    }
}

// Replays every move (including row moves) on a matrix; exact, no
// recanonicalization. This is how the normal-form identity is certified.
inline FpMatrix apply_transcript_matrix(FpMatrix gen, const IsometryTranscript& t) {
    detail::require_same_modulus(gen.prime(), t.p);
    for (const auto& m : t.moves) apply_move(gen, m, t.n);
    return gen;
}

// Applies the symplectic-space isometry part (ColPerm/LocalSp) to a single
// packed vector. Row moves act on generating sets, not on points of the
// space, so they are skipped here.
inline FpVec apply_transcript_vector(const FpVec& v, const IsometryTranscript& t) {
    FpMatrix m(1, v.size(), t.p);
    m.set_row(0, v);
    for (const auto& mv : t.moves) {
        if (std::holds_alternative<RowOp>(mv) || std::holds_alternative<RowScale>(mv)) continue;
        apply_move(m, mv, t.n);
    }
    return m.row(0);
}

// Group action on codes: transforms the subspace by the transcript's isometry
// part and returns it in canonical form. Row moves change generating matrices
// but not the subspace, so the action is well defined for any code dimension.
inline SymplecticCode apply_transcript(const SymplecticCode& code, const IsometryTranscript& t) {
    detail::require_same_modulus(code.prime(), t.p);
    if (code.n() != t.n)
        throw Error("ShapeMismatch", "transcript on " + std::to_string(t.n) +
                                         " coordinates vs code of length " + std::to_string(code.n()));
    FpMatrix gen = code.generator();
    for (const auto& mv : t.moves) {
        if (std::holds_alternative<RowOp>(mv) || std::holds_alternative<RowScale>(mv)) continue;
        apply_move(gen, mv, t.n);
    }
    return SymplecticCode(code.prime(), code.n(), gen);
}

inline IsometryTranscript invert_transcript(const IsometryTranscript& t) {
    const std::uint32_t p = t.p.value();
    IsometryTranscript inv{t.p, t.n, {}};
    inv.moves.reserve(t.moves.size());
    for (auto it = t.moves.rbegin(); it != t.moves.rend(); ++it) {
        if (const auto* r = std::get_if<RowOp>(&*it)) {
            inv.moves.push_back(RowOp{r->target, r->source, fp_neg_raw(r->scalar % p, p)});
        } else if (const auto* s = std::get_if<RowScale>(&*it)) {
            inv.moves.push_back(RowScale{s->target, fp_inv_raw(s->scalar, p)});
        } else if (const auto* c = std::get_if<ColPerm>(&*it)) {
            std::vector<std::size_t> ip(c->perm.size());
            for (std::size_t j = 0; j < c->perm.size(); ++j) ip[c->perm[j]] = j;
            inv.moves.push_back(ColPerm{std::move(ip)});
        } else if (const auto* l = std::get_if<LocalSp>(&*it)) {
            // [[a,b],[c,d]]^-1 = [[d,-b],[-c,a]] for determinant 1
            inv.moves.push_back(LocalSp{
                l->coord,
                {l->m[3], fp_neg_raw(l->m[1], p), fp_neg_raw(l->m[2], p), l->m[0]}});
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Self-dual embedding and normal form

// Extends a self-orthogonal code to a self-dual one, one vector at a time.
// Each adjoined vector is the first element of the current dual (enumerating
// coefficient vectors of its canonical basis in counting order, first basis
// row in the least significant digit) that is not already in the code.
// Returns the embedding and the adjoined vectors in order.
inline std::pair<SymplecticCode, FpMatrix> self_dual_embed(const SymplecticCode& c) {
    if (!c.is_self_orthogonal())
        throw Error("NotSelfOrthogonal", "code rows do not pairwise commute");
    const std::uint32_t p = c.p();
    const std::size_t n = c.n();

    SymplecticCode d = c;
    FpMatrix added(0, 2 * n, c.prime());
    while (d.dim() < n) {
        SymplecticCode dual = symp_dual(d);
        const FpMatrix& basis = dual.generator();
        const std::size_t m = basis.rows();
        bool adjoined = false;
        FpVec coeff(m, 0);
        // odometer over nonzero coefficient vectors, digit 0 least significant
        while (!adjoined) {
            std::size_t i = 0;
            while (i < m && coeff[i] == p - 1) coeff[i++] = 0;
            if (i == m) break;
            ++coeff[i];
            FpVec cand = basis.vec_mul(coeff);
            if (!d.contains(cand)) {
                FpMatrix one(1, 2 * n, c.prime());
                one.set_row(0, cand);
                added = added.vstack(one);
                d = SymplecticCode(c.prime(), n, d.generator().vstack(one));
                adjoined = true;
            }
        }
        if (!adjoined)
            throw Error("InternalError", "no extension vector found below self-dual dimension");
    }
    return {d, added};
}

struct StandardForm {
    FpMatrix cmat;                 // symmetric, zero diagonal
    IsometryTranscript transcript; // replaying it on the input generator gives (I | cmat)
};

namespace detail {

struct MoveRecorder {
    FpMatrix& gen;
    IsometryTranscript& t;
    std::size_t n;

    void rowop(std::size_t target, std::size_t source, std::uint32_t scalar) {
        Move m = RowOp{target, source, scalar};
        apply_move(gen, m, n);
        t.moves.push_back(m);
    }
    void rowscale(std::size_t target, std::uint32_t scalar) {
        Move m = RowScale{target, scalar};
        apply_move(gen, m, n);
        t.moves.push_back(m);
    }
    void rowswap(std::size_t i, std::size_t j) {
        std::uint32_t p = gen.p();
        rowop(i, j, 1);
        rowop(j, i, p - 1);
        rowop(i, j, 1);
        rowscale(j, p - 1);
    }
    void colswap(std::size_t i, std::size_t j) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[j]);
        Move m = ColPerm{std::move(perm)};
        apply_move(gen, m, n);
        t.moves.push_back(m);
    }
    void localsp(std::size_t coord, std::array<std::uint32_t, 4> sl2) {
        Move m = LocalSp{coord, sl2};
        apply_move(gen, m, n);
        t.moves.push_back(m);
    }
};

} // namespace detail

// Reduces a self-dual code to (I | C) with C symmetric and zero on the
// diagonal, recording every move. Pivots are taken coordinate by coordinate;
// a coordinate whose X column has no pivot but whose Z column does is turned
// around with the local move [[0,1],[-1,0]] first. Self-duality guarantees a
// pivot always exists in one of the two blocks.
inline StandardForm standard_form(const SymplecticCode& d) {
    const std::size_t n = d.n();
    const std::uint32_t p = d.p();
    if (d.dim() != n)
        throw Error("NotSelfDual", "dimension " + std::to_string(d.dim()) + " != n = " +
                                       std::to_string(n));

    FpMatrix gen = d.generator();
    IsometryTranscript t{d.prime(), n, {}};
    detail::MoveRecorder rec{gen, t, n};

    for (std::size_t r = 0; r < n; ++r) {
        // locate a pivot: first coordinate >= r offering one, X block preferred
        std::size_t pc = n, pr = n;
        bool use_z = false;
        for (std::size_t j = r; j < n && pc == n; ++j) {
            for (std::size_t i = r; i < n; ++i)
                if (gen(i, j) != 0) {
                    pc = j;
                    pr = i;
                    break;
                }
            if (pc == n)
                for (std::size_t i = r; i < n; ++i)
                    if (gen(i, n + j) != 0) {
                        pc = j;
                        pr = i;
                        use_z = true;
                        break;
                    }
        }
        if (pc == n)
            throw Error("InternalError", "no pivot available; input was not self-dual");
        if (use_z) rec.localsp(pc, {0, 1, p - 1, 0}); // x <- z, z <- -x
        if (pc != r) rec.colswap(pc, r);
        if (pr != r) rec.rowswap(pr, r);
        std::uint32_t inv = fp_inv_raw(gen(r, r), p);
        if (inv != 1) rec.rowscale(r, inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || gen(i, r) == 0) continue;
            rec.rowop(i, r, fp_neg_raw(gen(i, r), p));
        }
    }

    // X block is the identity; self-duality forces the Z block symmetric
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gen(i, n + j) != gen(j, n + i))
                throw Error("InternalError", "Z block emerged non-symmetric; input was not self-dual");

    // clear the diagonal with z_i <- z_i - P_ii x_i
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t pii = gen(i, n + i);
        if (pii != 0) rec.localsp(i, {1, 0, fp_neg_raw(pii, p), 1});
    }

    FpMatrix cmat = gen.submatrix(0, n, n, n);
    return {cmat, t};
}

} // namespace graphstab
