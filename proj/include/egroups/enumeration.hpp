#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "egroups/pipeline.hpp"

namespace egroups {

struct ClassCount {
    std::uint64_t q = 0;
    std::uint32_t p = 0, e = 1;
    std::size_t classes = 0;      // union-find classes
    std::size_t key_classes = 0;  // distinct canonical keys, computed independently
    std::size_t valid_pairs = 0;  // (a, b, P) with E nonsingular and P affine
    std::vector<ClassKey> representatives;  // sorted canonical keys
    std::vector<std::size_t> orbit_sizes;   // aligned with representatives
    /// Every union-find class carries exactly one canonical key.
    bool partitions_agree = false;
    double seconds = 0;
};

/// Classes of (a, b, x, y) under (u^4 a, u^6 b, u^2 x, u^3 y) and Frobenius.
/// `jobs` threads share the key computation; output does not depend on it.
ClassCount count_iso_classes(const FieldPtr& field, unsigned jobs = 1);
/// q must be a prime power p^e with p >= 5.
ClassCount count_iso_classes(std::uint64_t q, unsigned jobs = 1);

/// (p, e) with p^e = q, or throws BadInput.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

struct SurveyRow {
    std::uint32_t p = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::array<std::size_t, 6> counts{};  // indexed by StarType
    std::size_t rejected = 0;             // draws with a singular Pfaffian
    std::size_t without_decomposition = 0;
    std::size_t unitary_without_decomposition = 0;

    std::size_t count(StarType t) const { return counts[static_cast<std::size_t>(t)]; }
    double fraction(StarType t) const { return samples ? double(count(t)) / double(samples) : 0.0; }
    /// Orthogonal1 and LocalOrthogonal together.
    double orthogonal_fraction() const;
};

/// Uniform skew 6x6 matrices of linear forms over GF(p), redrawn until the
/// Pfaffian is smooth, tallied by the star type of the adjoint algebra.
/// Sample i uses Rng::derive(seed, i), so the result is independent of `jobs`.
SurveyRow adjoint_survey(std::uint32_t p, std::size_t samples, std::uint64_t seed, unsigned jobs = 1);
/// One accepted survey matrix; also returns the number of rejected draws.
LinearFormMatrix survey_sample(const FieldPtr& field, std::uint64_t seed, std::size_t index,
                               std::size_t* rejected = nullptr);

struct TimingRow {
    std::uint64_t q = 0;
    double recognize_ms = 0;
    double isotest_ms = 0;
};
inline constexpr const char* kTimingCsvHeader = "q,recognize_ms,isotest_ms";

/// Random nonsingular curve with a random affine point.
EGroupSpec random_egroup(const FieldPtr& field, std::uint64_t seed);
/// Medians over `instances` runs of: random (E, P), flatten, scramble,
/// recognize the scrambled tensor, iso_coset(source, scrambled).
std::vector<TimingRow> timing_harness(const std::vector<std::uint64_t>& qs, std::uint64_t seed,
                                      unsigned instances = 3);
/// Primes from 5 up to qmax, growing by about 1.5x.
std::vector<std::uint64_t> timing_sizes(std::uint64_t qmax);

}  // namespace egroups
