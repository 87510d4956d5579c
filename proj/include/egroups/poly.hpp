#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "egroups/field.hpp"

namespace egroups {

/// Dense univariate polynomial, coefficients low to high, trailing zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<Fq> coeffs);

    static UniPoly constant(FieldPtr field, Fq c);
    static UniPoly x(FieldPtr field);
    /// x - r
    static UniPoly linear_root(FieldPtr field, Fq r);

    const FieldPtr& field() const { return field_; }
    const std::vector<Fq>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq{}; }
    Fq lead() const { return c_.empty() ? Fq{} : c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0].v == 1; }

    UniPoly monic() const;
    UniPoly derivative() const;
    Fq eval(Fq x) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(Fq c) const;
    bool operator==(const UniPoly& other) const { return c_ == other.c_; }

private:
    void trim();

    FieldPtr field_;
    std::vector<Fq> c_;
};

/// Quotient and remainder; b nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(const UniPoly& base, std::uint64_t n, const UniPoly& m);

struct Factor {
    UniPoly poly;  // monic irreducible
    unsigned multiplicity = 0;
};

/// Squarefree, distinct-degree and equal-degree splitting. Factors are monic
/// and sorted by (degree, coefficients); `f.lead()` is the leading unit.
std::vector<Factor> factor_univariate(const UniPoly& f, std::uint64_t seed = 0);
bool is_irreducible(const UniPoly& f);
/// Distinct roots in ascending element order.
std::vector<Fq> roots(const UniPoly& f, std::uint64_t seed = 0);

}  // namespace egroups
