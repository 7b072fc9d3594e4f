#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphstab/extension.hpp"
#include "graphstab/fp.hpp"
#include "graphstab/matrix.hpp"
#include "graphstab/symplectic.hpp"

namespace graphstab {

// q(v) = sum_{i<j} adj_ij v_i v_j for a symmetric zero-diagonal adjacency.
inline std::uint32_t quad_form_raw(const FpMatrix& adj, const FpVec& v) {
    if (v.size() != adj.rows())
        throw Error("LengthMismatch", "vector of length " + std::to_string(v.size()) +
                                          " against " + adj.shape_string() + " adjacency");
    const std::uint32_t p = adj.p();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = i + 1; j < v.size(); ++j)
            acc += static_cast<std::uint64_t>(adj(i, j)) * v[i] % p * v[j] % p;
    }
    return static_cast<std::uint32_t>(acc % p);
}

// A weighted graph on k input and n output vertices, inputs first. The
// stabilizer code it describes is read off the blocks
//   adj = [[0, B], [B^t, M_y]]
// where B is k x n and M_y is the adjacency among outputs. Structural
// invariants (symmetry, no loops, no input-input edges) hold by construction;
// the rank condition on B is checked separately so defective graphs can be
// loaded and diagnosed.
class GraphCode {
public:
    GraphCode(Prime p, std::size_t k, std::size_t n, const FpMatrix& adj)
        : p_(p), k_(k), n_(n), adj_(adj) {
        validate_structure();
    }

    Prime prime() const { return p_; }
    std::uint32_t p() const { return p_.value(); }
    std::size_t inputs() const { return k_; }
    std::size_t outputs() const { return n_; }
    std::size_t vertices() const { return k_ + n_; }
    const FpMatrix& adjacency() const { return adj_; }

    FpMatrix input_output_block() const { return adj_.submatrix(0, k_, k_, n_); }
    FpMatrix output_block() const { return adj_.submatrix(k_, k_, n_, n_); }

    bool is_valid() const { return rank(input_output_block()) == k_; }

    void validate() const {
        std::size_t r = rank(input_output_block());
        if (r != k_)
            throw Error("RankDeficientB", "input-output block has rank " + std::to_string(r) +
                                              " < k = " + std::to_string(k_) +
                                              "; some encoded states coincide");
    }

private:
    void validate_structure() const {
        detail::require_same_modulus(p_, adj_.prime());
        if (adj_.rows() != k_ + n_ || adj_.cols() != k_ + n_)
            throw Error("ShapeMismatch", "adjacency is " + adj_.shape_string() + ", expected " +
                                             std::to_string(k_ + n_) + "x" + std::to_string(k_ + n_));
        for (std::size_t i = 0; i < adj_.rows(); ++i) {
            if (adj_(i, i) != 0)
                throw Error("NonzeroDiagonal", "loop at vertex " + std::to_string(i));
            for (std::size_t j = i + 1; j < adj_.cols(); ++j)
                if (adj_(i, j) != adj_(j, i))
                    throw Error("AsymmetricAdjacency", "entries (" + std::to_string(i) + "," +
                                                           std::to_string(j) + ") and transpose differ");
        }
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                if (adj_(i, j) != 0)
                    throw Error("NonzeroInputBlock",
                                "edge between input vertices " + std::to_string(i) + " and " +
                                    std::to_string(j) +
                                    "; such edges only contribute a global phase per encoded "
                                    "state, so normalized graphs omit them");
    }

    Prime p_;
    std::size_t k_, n_;
    FpMatrix adj_;
};

inline FpElem quad_form(const GraphCode& g, const FpVec& v) {
    return {static_cast<std::int64_t>(quad_form_raw(g.adjacency(), v)), g.prime()};
}

// Polarization of q: b(u,v) = q(u+v) - q(u) - q(v) = u^t adj v.
inline FpElem bilinear_form(const GraphCode& g, const FpVec& u, const FpVec& v) {
    const FpMatrix& adj = g.adjacency();
    if (u.size() != adj.rows() || v.size() != adj.rows())
        throw Error("LengthMismatch", "vectors of lengths " + std::to_string(u.size()) + ", " +
                                          std::to_string(v.size()) + " against " +
                                          adj.shape_string() + " adjacency");
    return {static_cast<std::int64_t>(dot_raw(u, adj.mul_vec(v), g.p())), g.prime()};
}

// Reads the same weighted graph over the degree-m extension field and
// rewrites it over the prime field: every vertex splits into m vertices and
// the adjacency becomes the Kronecker product adj (x) gram. Inputs stay a
// prefix, the diagonal stays zero, and a non-degenerate gram keeps the rank
// condition intact.
inline GraphCode flatten_graph(const GraphCode& g, const ExtensionBasis& basis) {
    detail::require_same_modulus(g.prime(), basis.p);
    const std::size_t m = basis.degree;
    const std::size_t v = g.vertices();
    FpMatrix flat(v * m, v * m, g.prime());
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b) {
            std::uint32_t w = g.adjacency()(a, b);
            if (w == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    flat.set(a * m + i, b * m + j, fp_mul_raw(w, basis.gram(i, j), g.p()));
        }
    return GraphCode(g.prime(), g.inputs() * m, g.outputs() * m, flat);
}

// One stabilizer generator with its scalar: omega^{phase_exp} X^{vector.a} Z^{vector.d}.
struct PhasedStabilizerGen {
    SymplecticVector vector;
    FpElem phase_exp;
};

struct StabilizerResult {
    std::vector<PhasedStabilizerGen> gens;
    SymplecticCode symp;
};

// The stabilizer of the graph's code: for each kernel vector a of B, the
// operator omega^{q(a)} X^a Z^{a M_y}, with q evaluated on the output block.
inline StabilizerResult graph_to_stabilizer(const GraphCode& g) {
    g.validate();
    const std::size_t k = g.inputs();
    const std::size_t n = g.outputs();
    FpMatrix b = g.input_output_block();
    FpMatrix my = g.output_block();
    FpMatrix d = (k == 0) ? FpMatrix::identity(n, g.prime()) : kernel_basis(b);
    FpMatrix gen = d.hstack(d * my);

    std::vector<PhasedStabilizerGen> gens;
    gens.reserve(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        FpVec a = d.row(i);
        FpVec full(k, 0);
        full.insert(full.end(), a.begin(), a.end());
        FpVec z = my.vec_mul(a);
        gens.push_back(PhasedStabilizerGen{SymplecticVector(a, z, g.prime()),
                                           quad_form(g, full)});
    }
    return {std::move(gens), SymplecticCode(g.prime(), n, gen)};
}

struct GraphExtraction {
    GraphCode graph;
    IsometryTranscript transcript;
    FpMatrix d_coeffs;
};

// Turns a self-orthogonal code into an equivalent graph: embed into a
// self-dual code, reduce that to (I | C), push the input code through the
// recorded isometry, and read off which kernel the pushed code selects. The
// returned transcript certifies the construction: pulling the graph's
// stabilizer code back through its inverse recovers the input row space.
inline GraphExtraction stabilizer_to_graph(const SymplecticCode& c) {
    const std::size_t n = c.n();
    if (!c.is_self_orthogonal())
        throw Error("NotSelfOrthogonal", "code rows do not pairwise commute");

    auto [d, added] = self_dual_embed(c);
    StandardForm sf = standard_form(d);
    SymplecticCode pushed = apply_transcript(c, sf.transcript);

    // Rows of (I | cmat) are a basis, so the coefficient matrix is just the
    // pushed code's X block; verify the factorization exactly.
    FpMatrix d_coeffs = pushed.generator().submatrix(0, 0, pushed.dim(), n);
    FpMatrix icm = FpMatrix::identity(n, c.prime()).hstack(sf.cmat);
    if (!(d_coeffs * icm == pushed.generator()))
        throw Error("InternalError", "pushed code does not factor through (I | C)");

    FpMatrix b = parity_check(d_coeffs);
    const std::size_t k = b.rows(); // n - dim(c)

    FpMatrix adj(k + n, k + n, c.prime());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            adj.set(i, k + j, b(i, j));
            adj.set(k + j, i, b(i, j));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj.set(k + i, k + j, sf.cmat(i, j));

    return {GraphCode(c.prime(), k, n, adj), sf.transcript, d_coeffs};
}

} // namespace graphstab
