#pragma once

#include <array>
#include <compare>
#include <vector>

#include "egroups/matrix.hpp"

namespace egroups {

using Triple = std::array<Fq, 3>;

/// n x m matrix of linear forms in y1, y2, y3, stored as M(y) = S1 y1 + S2 y2 + S3 y3.
struct LinearFormMatrix {
    FieldPtr field;
    std::array<Matrix, 3> slices;

    static LinearFormMatrix zero(FieldPtr field, std::size_t rows, std::size_t cols);
    std::size_t rows() const { return slices[0].rows(); }
    std::size_t cols() const { return slices[0].cols(); }
    /// Every slice satisfies S^T = -S (zero diagonal follows for odd p).
    bool is_skew() const;
    LinearFormMatrix transpose() const;
    bool operator==(const LinearFormMatrix& other) const { return slices == other.slices; }
};

Matrix eval_linear_matrix(const LinearFormMatrix& m, const Triple& y);
/// M(Z y).
LinearFormMatrix substitute(const LinearFormMatrix& m, const Matrix& z);
/// X^T M(y) Y slicewise. Throws SingularTransform when `require_invertible` and X or Y is singular.
LinearFormMatrix congruence(const LinearFormMatrix& m, const Matrix& x, const Matrix& y,
                            bool require_invertible = false);
/// Entrywise Frobenius x -> x^(p^k).
LinearFormMatrix galois_twist(const LinearFormMatrix& m, unsigned k);

/// Homogeneous polynomial in y1, y2, y3. Monomials are ordered by descending
/// exponent of y1, then of y2: for cubics
/// y1^3, y1^2y2, y1^2y3, y1y2^2, y1y2y3, y1y3^2, y2^3, y2^2y3, y2y3^2, y3^3.
class TernaryForm {
public:
    TernaryForm() = default;
    TernaryForm(FieldPtr field, unsigned degree);
    TernaryForm(FieldPtr field, unsigned degree, std::vector<Fq> coeffs);

    static std::size_t monomial_count(unsigned degree) { return (degree + 1) * (degree + 2) / 2; }
    static std::size_t index(unsigned degree, unsigned i, unsigned j, unsigned k);
    static std::array<unsigned, 3> exponents(unsigned degree, std::size_t idx);
    /// c1 y1 + c2 y2 + c3 y3.
    static TernaryForm linear(FieldPtr field, const Triple& c);
    static TernaryForm constant(FieldPtr field, Fq c);

    const FieldPtr& field() const { return field_; }
    unsigned degree() const { return degree_; }
    const std::vector<Fq>& coeffs() const { return c_; }
    Fq coeff(unsigned i, unsigned j, unsigned k) const { return c_[index(degree_, i, j, k)]; }
    void set(unsigned i, unsigned j, unsigned k, Fq v) { c_[index(degree_, i, j, k)] = v; }
    bool is_zero() const;

    Fq eval(const Triple& y) const;
    /// Derivative in variable 0, 1 or 2.
    TernaryForm partial(unsigned var) const;
    /// f(Z y).
    TernaryForm substitute(const Matrix& z) const;
    TernaryForm scaled(Fq c) const;

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
    bool operator==(const TernaryForm& other) const { return degree_ == other.degree_ && c_ == other.c_; }

private:
    FieldPtr field_;
    unsigned degree_ = 0;
    std::vector<Fq> c_;
};

using TernaryCubic = TernaryForm;

/// y1^3 + a y1 y3^2 + b y3^3 - y2^2 y3.
TernaryCubic weierstrass_cubic(const FieldPtr& field, Fq a, Fq b);
/// Some c with f = c g, if one exists (g nonzero).
std::optional<Fq> proportionality(const TernaryForm& f, const TernaryForm& g);

/// Projective point, first nonzero coordinate equal to one.
struct ProjPoint {
    Triple x;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};
/// Throws BadInput on the zero vector.
ProjPoint normalize_point(const Field& field, const Triple& x);

/// Pfaffian of a 6x6 skew matrix of linear forms; the standard symplectic
/// form with blocks [[0,1],[-1,0]] has Pfaffian +1. Throws NotSkew.
TernaryCubic pfaffian6(const LinearFormMatrix& b);
/// Determinant of a 3x3 matrix of linear forms.
TernaryCubic det3(const LinearFormMatrix& m);
/// Determinant of the matrix of second partials.
TernaryCubic hessian_cubic(const TernaryCubic& f);

/// Resultant test on the partials: true iff the cubic has no singular point
/// over the algebraic closure. Uses the 6x6 determinant built from the
/// partials of f and of its Hessian.
bool is_smooth(const TernaryCubic& f);

struct SingularPoint {
    unsigned ext_degree = 1;  // smallest k with the point defined over GF(q^k)
    FieldPtr field;           // GF(q^k)
    ProjPoint point;
};
/// Exhaustive scan of P^2(GF(q^k)) for k <= max_ext. Throws TooLarge when the
/// scan exceeds about 2*10^7 points.
std::vector<SingularPoint> singular_points(const TernaryCubic& f, unsigned max_ext);

/// Rational points of the cubic, ascending.
std::vector<ProjPoint> rational_points(const TernaryCubic& f);
/// Smooth rational points where the Hessian vanishes, ascending.
std::vector<ProjPoint> rational_flexes(const TernaryCubic& f);

struct WeierstrassTransform {
    Matrix z;    // f(Z y) = scale * weierstrass_cubic(a, b)
    Fq scale;
    Fq a, b;
    bool singular = false;  // 4a^3 + 27b^2 = 0
};
/// Throws NotAFlex when `flex` is not a smooth flex of f.
WeierstrassTransform weierstrass_normalize(const TernaryCubic& f, const ProjPoint& flex);

}  // namespace egroups
