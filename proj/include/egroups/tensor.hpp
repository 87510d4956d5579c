#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egroups/forms.hpp"

namespace egroups {

/// Bilinear map V x V -> T given by structure matrices: t(u, w)_k = u^T C_k w.
struct TensorHandle {
    FieldPtr field;
    std::size_t dim_v = 0;
    std::vector<Matrix> forms;

    std::size_t dim_t() const { return forms.size(); }
    /// Every form square of size dim_v and skew-symmetric.
    bool is_alternating() const;
    Vec eval(const Vec& u, const Vec& w) const;
};

TensorHandle to_tensor(const LinearFormMatrix& m);

enum class AlgebraKind {
    Centroid,  // triples (alpha, beta, gamma), componentwise product
    Adjoint,   // pairs (X, Y) with X^T B = B Y, product (X, Y)(X', Y') = (X X', Y' Y)
    Module,    // pairs (A, B) with A^T N = M B, no product
};

using AlgElem = std::vector<Matrix>;

struct AlgebraBasis {
    FieldPtr field;
    AlgebraKind kind = AlgebraKind::Adjoint;
    std::vector<AlgElem> basis;

    std::size_t dim() const { return basis.size(); }
    AlgElem identity() const;
    AlgElem zero() const;
    AlgElem mul(const AlgElem& a, const AlgElem& b) const;
    /// Adjoint: (X, Y) -> (Y, X). Centroid: (alpha, beta, gamma) -> (beta, alpha, gamma).
    AlgElem star(const AlgElem& a) const;
    AlgElem combine(const Vec& coeffs) const;
    AlgElem random_element(Rng& rng) const;
    /// Coordinates in the basis, if the element lies in the span.
    std::optional<Vec> coordinates(const AlgElem& a) const;
    /// Block-diagonal matrix image under a faithful representation.
    Matrix regular(const AlgElem& a) const;
    /// Products of basis elements stay in the span (algebras only).
    bool is_closed() const;
    bool is_commutative() const;
};

AlgElem alg_add(const AlgElem& a, const AlgElem& b);
AlgElem alg_sub(const AlgElem& a, const AlgElem& b);
AlgElem alg_scale(const AlgElem& a, Fq c);
bool alg_is_zero(const AlgElem& a);

/// Solutions (alpha, beta, gamma) of t(alpha u, w) = t(u, beta w) = gamma t(u, w).
AlgebraBasis centroid(const TensorHandle& t);

enum class RewriteStatus { Ok, NotField, WrongShape };

struct FieldRewrite {
    RewriteStatus status = RewriteStatus::NotField;
    std::string reason;
    unsigned degree = 0;  // e with Cent(t) = GF(p^e)
    FieldPtr field;       // GF(p^e) with its default modulus
    LinearFormMatrix form;
    /// (phi_v, phi_t) is a pseudo-isometry from flatten_to_prime(form) to t.
    Matrix phi_v, phi_t;
    Fq root;  // image of the centroid generator in `field`
};

/// Re-expresses a prime-field tensor over its centroid when the centroid is a
/// field GF(p^e) and the dimensions are (6e, 3e). Generators are found by up
/// to 32 seeded random trials.
FieldRewrite centroid_field_rewrite(const TensorHandle& t, std::uint64_t seed = 0);

/// All (X, Y) with X^T B = B Y slicewise.
AlgebraBasis adjoint(const LinearFormMatrix& b);
AlgebraBasis adjoint(const TensorHandle& t);
/// All (A, B) with A^T N = M B slicewise.
AlgebraBasis adjoint_module(const LinearFormMatrix& m, const LinearFormMatrix& n);

enum class StarType { Orthogonal1, LocalOrthogonal, Exchange, Symplectic2, Unitary1, Other };
const char* to_string(StarType t);

struct StarTypeResult {
    StarType type = StarType::Other;
    std::optional<AlgElem> idempotent;  // Exchange, Symplectic2
    std::optional<AlgElem> nilpotent;   // LocalOrthogonal
    std::optional<AlgElem> generator;   // Unitary1
    std::string diagnostics;
};

StarTypeResult star_type(const AlgebraBasis& a, std::uint64_t seed = 0);

/// X with X^T B X = [[0, M], [-M^T, 0]], when the adjoint star type allows one.
std::optional<Matrix> isotropic_decomposition(const LinearFormMatrix& b, std::uint64_t seed = 0);
/// Same, from an already classified adjoint algebra.
std::optional<Matrix> isotropic_decomposition(const LinearFormMatrix& b, const StarTypeResult& st);

struct TiReport {
    std::uint64_t count = 0;
    /// "0", "1", "2", "q+1" or "other".
    std::string count_class;
    /// Row bases (3 x 6) of the first few counted subspaces.
    std::vector<Matrix> subspaces;
};

/// Number of 3-dimensional totally isotropic subspaces of a skew 6x6 matrix of
/// linear forms, by enumerating reduced row-echelon representatives. Throws
/// TooLarge when the Gaussian binomial [6 choose 3]_q exceeds `limit`.
TiReport ti_count_bruteforce(const LinearFormMatrix& b, std::uint64_t limit = 50'000'000);

/// P_V^T C_i^t P_V = sum_j (P_T)_ij C_j^s for all i. Throws DimensionMismatch.
bool verify_pseudo_isometry(const TensorHandle& s, const TensorHandle& t, const Matrix& pv, const Matrix& pt);

}  // namespace egroups
