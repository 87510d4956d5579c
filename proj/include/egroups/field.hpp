#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace egroups {

/// Element of GF(p^e), stored as the integer code sum_i c_i p^i of its
/// coefficient vector in the power basis of the modulus root. Comparing codes
/// is the element ordering used for every deterministic tie-break.
struct Fq {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    /// Monic, e+1 coefficients, low to high.
    std::vector<std::uint32_t> modulus;

    std::uint64_t order() const;
    bool operator==(const FieldSpec&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^e). Without an explicit modulus the smallest monic irreducible
/// (ordered by the code of its non-leading coefficients) is chosen.
FieldPtr field_make(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
FieldPtr field_make(const FieldSpec& spec);

class Field {
public:
    /// Largest field order with precomputed tables.
    static constexpr std::uint64_t kMaxOrder = 1ULL << 24;

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t e() const { return spec_.e; }
    std::uint32_t q() const { return q_; }

    Fq zero() const { return {0}; }
    Fq one() const { return {1}; }
    /// Image of an integer under Z -> GF(p) -> GF(p^e).
    Fq from_int(std::int64_t n) const;
    Fq from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Fq x) const;
    Fq element(std::uint64_t code) const;
    /// Root of the modulus; equals zero for prime fields (modulus x).
    Fq alpha() const;

    Fq add(Fq a, Fq b) const {
        if (spec_.e == 1) {
            std::uint32_t s = a.v + b.v;
            return {s >= q_ ? s - q_ : s};
        }
        return add_ext(a, b);
    }
    Fq neg(Fq a) const {
        if (a.v == 0) return a;
        if (spec_.e == 1) return {q_ - a.v};
        return {exp_[log_[a.v] + (q_ - 1) / 2]};
    }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const {
        if (spec_.e == 1)
            return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % q_)};
        if (a.v == 0 || b.v == 0) return {0};
        return {exp_[log_[a.v] + log_[b.v]]};
    }
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t n) const;
    /// a^(p^k).
    Fq frobenius(Fq a, unsigned k) const;
    Fq half() const { return half_; }

    Fq primitive() const { return {exp_[1]}; }
    /// Discrete log base primitive(); a must be nonzero.
    std::uint32_t log(Fq a) const { return log_[a.v]; }
    Fq exp(std::uint64_t k) const { return {exp_[k % (q_ - 1)]}; }

    bool is_square(Fq a) const { return a.v == 0 || log_[a.v] % 2 == 0; }
    std::optional<Fq> sqrt(Fq a) const;
    /// All x with x^n = c.
    std::vector<Fq> nth_roots(Fq c, std::uint64_t n) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    friend FieldPtr field_make(std::uint32_t, std::uint32_t,
                               std::optional<std::vector<std::uint32_t>>);
    explicit Field(FieldSpec spec);

    Fq add_ext(Fq a, Fq b) const;
    std::uint32_t mul_codes_slow(std::uint32_t a, std::uint32_t b) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    Fq half_;
    std::vector<std::uint32_t> pow_p_;  // p^i for i < e
    std::vector<std::uint32_t> exp_;    // length 2(q-1)
    std::vector<std::uint32_t> log_;    // length q
    std::vector<std::int32_t> zech_;    // log(1 + g^n), -1 when 1 + g^n = 0
};

Fq frobenius(const Field& field, Fq x, unsigned k);
/// All x with x^n = 1, ascending.
std::vector<Fq> roots_of_unity(const Field& field, unsigned n);
/// Smallest multiplicative generator in element order.
Fq primitive_element(const Field& field);

/// GF(q) inside GF(q^k), the larger field built with its default modulus.
struct FieldEmbedding {
    FieldPtr small, big;
    std::vector<Fq> image;             // indexed by code in `small`
    std::vector<std::int32_t> preimage;  // indexed by code in `big`, -1 outside the image

    Fq operator()(Fq x) const { return image[x.v]; }
    std::optional<Fq> descend(Fq y) const {
        if (preimage[y.v] < 0) return std::nullopt;
        return Fq{static_cast<std::uint32_t>(preimage[y.v])};
    }
};
FieldEmbedding embed_extension(const FieldPtr& small, unsigned k);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace egroups
