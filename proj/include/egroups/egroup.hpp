#pragma once

#include <cstdint>

#include "egroups/ecurve.hpp"
#include "egroups/tensor.hpp"

namespace egroups {

/// 3x3 matrix of linear forms for a curve and an affine point (lambda, mu):
///   [ y1 - l y3      y2 - m y3              0   ]
///   [ y2 + m y3      l y1 + (a + l^2) y3    y1  ]
///   [ 0              y1                     -y3 ]
/// Throws PointAtInfinity.
LinearFormMatrix j_matrix(const EllipticCurve& e, const ECPoint& p);
/// Symmetric matrix equivalent to j_matrix for a point of order 2. Throws NotTwoTorsion.
LinearFormMatrix hessian_matrix_rep(const EllipticCurve& e, const ECPoint& p);
/// [[0, J], [-J^T, 0]].
LinearFormMatrix block_skew(const LinearFormMatrix& j);
LinearFormMatrix b_matrix(const EllipticCurve& e, const ECPoint& p);

struct EGroupSpec {
    EllipticCurve curve;
    ECPoint point;
    LinearFormMatrix b;
};
/// Throws PointAtInfinity or PointNotOnCurve.
EGroupSpec egroup_make(const EllipticCurve& e, const ECPoint& p);

struct GroupElement {
    Vec v;  // length dim V
    Vec w;  // length dim T
    bool operator==(const GroupElement&) const = default;
};

/// V x T with (v, w)(v', w') = (v + v', w + w' + t(v, v')/2).
class BaerGroup {
public:
    explicit BaerGroup(TensorHandle t);
    const TensorHandle& tensor() const { return t_; }

    GroupElement identity() const;
    GroupElement mul(const GroupElement& g, const GroupElement& h) const;
    GroupElement inv(const GroupElement& g) const;
    /// g^-1 h^-1 g h
    GroupElement comm(const GroupElement& g, const GroupElement& h) const;
    GroupElement pow(const GroupElement& g, std::uint64_t n) const;
    GroupElement random(Rng& rng) const;

private:
    TensorHandle t_;
};

/// Regular representation over GF(p) with basis {alpha^a}: index (i, a) -> i*e + a
/// on V and (k, c) -> k*e + c on T.
TensorHandle flatten_to_prime(const LinearFormMatrix& b);
/// Matrix of v -> X v on the flattened space: entry [(j,b),(i,a)] = coeff_b(X_ji alpha^a).
Matrix flatten_matrix(const Matrix& x);
/// Frobenius^k on n stacked copies of GF(p^e) = GF(p)^e.
Matrix flatten_frobenius(const FieldPtr& field, std::size_t n, unsigned k);

struct Scrambled {
    TensorHandle tensor;
    Matrix x, z;  // forms X^T (sum_k Z_kj C_k) X
};
Scrambled scramble_with_transform(const TensorHandle& t, std::uint64_t seed);
TensorHandle scramble(const TensorHandle& t, std::uint64_t seed);

}  // namespace egroups
