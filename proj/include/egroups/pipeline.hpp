#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "egroups/egroup.hpp"

namespace egroups {

/// Lexicographically least (a, b, x, y) codes over the orbit of (E, P) under
/// Frobenius twists and scalings (a, b, x, y) -> (u^4 a, u^6 b, u^2 x, u^3 y).
using ClassKey = std::array<std::uint32_t, 4>;
ClassKey canonical_key(const EllipticCurve& e, const ECPoint& p);

enum class RecognitionStatus {
    Elliptic,
    NotClass2Shape,
    CentroidNotField,
    WrongDims,
    PfaffianSingular,
    NoRationalFlex,
    NotDecomposable,
};
const char* to_string(RecognitionStatus s);

/// Pair of matrices (P_V, P_T) with an attached Frobenius power. Over the
/// prime field the semilinear part is already absorbed into the matrices.
struct PseudoIsometry {
    Matrix v, t;
    unsigned sigma_power = 0;
};

struct RecognitionReport {
    RecognitionStatus status = RecognitionStatus::NotClass2Shape;
    std::string reason;
    FieldPtr field;  // GF(p^e) from the centroid
    std::optional<EllipticCurve> curve;
    ECPoint point;
    StarType star = StarType::Other;
    LinearFormMatrix form;          // the input rewritten over the centroid
    Matrix weierstrass;             // Pf(form)(Z y) = c * (y1^3 + a y1 y3^2 + b y3^3 - y2^2 y3)
    Matrix decomposition;           // splits form(Z y) into [[0, N], [-N^T, 0]]
    ClassKey key{};
    std::size_t flex_count = 0;
    /// Maps flatten_to_prime(b_matrix(curve, point)) onto the input tensor.
    PseudoIsometry to_input;
    /// Same map over the centroid field, landing on `form`.
    PseudoIsometry to_form;
};

/// `flex_index` selects the rational flex used for the Weierstrass model (0 = first in point order).
RecognitionReport recognize(const TensorHandle& t, std::uint64_t seed = 0, std::size_t flex_index = 0);

struct RecoveredPoint {
    ECPoint point;
    Matrix a, b;  // a^T N = J_{E,P} b
};
/// First P in point order with a nonzero invertible solution of A^T N = J_{E,P} B.
/// Throws NoPointFound.
RecoveredPoint recover_point(const LinearFormMatrix& n, const EllipticCurve& e);

/// Field-level pseudo-isometries of b_matrix(E, P) to itself generating the
/// linear part of its pseudo-isometry group.
std::vector<PseudoIsometry> psi_isom_generators(const EllipticCurve& e, const ECPoint& p);

struct OrderFactors {
    std::uint64_t q = 0;
    unsigned q_power = 0;        // 18 for the full automorphism group, 0 for the pseudo-isometry part
    std::size_t galois = 1;      // |Gal_{E,P}|
    std::size_t torsion3 = 0;    // |E[3](F)|
    std::size_t aut_ratio = 0;   // |Aut_O(E)| / |Aut_O(E) P|
    std::string tail;            // "GL2" or "2(q-1)^2"
    std::string tail_value;      // decimal
    std::string value;           // decimal product
};
OrderFactors psi_isom_order(const EllipticCurve& e, const ECPoint& p);
OrderFactors aut_order(const EllipticCurve& e, const ECPoint& p);

struct IsoCoset {
    bool isomorphic = false;
    std::string reason;
    std::optional<PseudoIsometry> witness;   // prime-field pair from the first to the second input
    std::vector<PseudoIsometry> generators;  // prime-field self-maps of the first input, when isomorphic
    std::vector<unsigned> galois;            // Frobenius powers in Gal_{E,P}
    RecognitionReport first, second;
};
IsoCoset iso_coset(const TensorHandle& t1, const TensorHandle& t2, std::uint64_t seed = 0);
/// Same, reusing recognition reports.
IsoCoset iso_coset(const TensorHandle& t1, const RecognitionReport& r1, const TensorHandle& t2,
                   const RecognitionReport& r2);

/// Linear map (diag(A, B^-1), Omega^-T) from b_matrix(J) to b_matrix(J2) when
/// A^T J2(Omega y) = J B has an invertible solution.
std::optional<PseudoIsometry> link_by_module(const LinearFormMatrix& j, const LinearFormMatrix& j2,
                                             const Matrix& omega);

}  // namespace egroups
