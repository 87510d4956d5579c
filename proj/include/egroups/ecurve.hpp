#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "egroups/forms.hpp"

namespace egroups {

/// y^2 = x^3 + a x + b with 4a^3 + 27b^2 != 0.
struct EllipticCurve {
    FieldPtr field;
    Fq a, b;
};

/// Throws SingularCurve.
EllipticCurve curve_make(FieldPtr field, Fq a, Fq b);
bool is_nonsingular(const Field& field, Fq a, Fq b);

/// Identity (0:1:0) or an affine point. Ordered with the identity first, then by (x, y).
struct ECPoint {
    bool finite = false;
    Fq x, y;

    static ECPoint identity() { return {}; }
    static ECPoint affine(Fq x, Fq y) { return {true, x, y}; }
    bool is_identity() const { return !finite; }
    /// Homogeneous coordinates.
    Triple projective(const Field& field) const;
    friend auto operator<=>(const ECPoint&, const ECPoint&) = default;
};

bool on_curve(const EllipticCurve& e, const ECPoint& p);
ECPoint neg(const EllipticCurve& e, const ECPoint& p);
/// Throws PointNotOnCurve.
ECPoint add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint smul(const EllipticCurve& e, std::int64_t k, const ECPoint& p);

/// Identity first, then x ascending, y ascending.
std::vector<ECPoint> enumerate_points(const EllipticCurve& e);
/// E[m](F) for m in {2, 3}, sorted like enumerate_points.
std::vector<ECPoint> torsion(const EllipticCurve& e, unsigned m);
Fq j_invariant(const EllipticCurve& e);

struct AutElement {
    Fq omega;
    Matrix matrix;  // diag(omega^2, omega^3, 1)
};
/// Automorphisms fixing the identity: omega in mu_2, mu_4 or mu_6 by j-invariant.
std::vector<AutElement> aut_O(const EllipticCurve& e);
/// {(u^2 x, u^3 y)} over the automorphisms, sorted.
std::vector<ECPoint> orbit_of_point(const EllipticCurve& e, const ECPoint& p);

/// Curve and point with every coordinate raised to p^k.
EllipticCurve twist_curve(const EllipticCurve& e, unsigned k);
ECPoint twist_point(const EllipticCurve& e, const ECPoint& p, unsigned k);
/// (u^4 a, u^6 b) and (u^2 x, u^3 y).
EllipticCurve scale_curve(const EllipticCurve& e, Fq u);
ECPoint scale_point(const EllipticCurve& e, const ECPoint& p, Fq u);

struct CurveIso {
    Fq u;
    unsigned sigma_power = 0;
};
/// Smallest u with (a', b', x', y') = (u^4 s(a), u^6 s(b), u^2 s(x), u^3 s(y)), s = Frobenius^k.
std::optional<CurveIso> iso_with_point(const EllipticCurve& e, const ECPoint& p, const EllipticCurve& e2,
                                       const ECPoint& p2, unsigned k);
/// Powers k such that (E, P) and its k-th Frobenius twist are related by a scaling.
std::vector<unsigned> galois_group_EP(const EllipticCurve& e, const ECPoint& p);

/// Matrix g with g R proportional to R + Q for every point R, normalized so
/// that its first nonzero entry is one. Throws NotThreeTorsion.
Matrix translation_matrix(const EllipticCurve& e, const ECPoint& q);

}  // namespace egroups
