#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "egroups/enumeration.hpp"
#include "egroups/errors.hpp"

using namespace egroups;

namespace {

// Orbit count of F^x semidirect Gal on (a, b, x, y) by Burnside's lemma.
std::size_t burnside_count(const FieldPtr& F) {
    const Field& f = *F;
    std::vector<std::array<Fq, 4>> tuples;
    for (std::uint32_t a = 0; a < f.q(); ++a)
        for (std::uint32_t b = 0; b < f.q(); ++b) {
            if (!is_nonsingular(f, Fq{a}, Fq{b})) continue;
            for (auto& pt : enumerate_points(curve_make(F, Fq{a}, Fq{b})))
                if (pt.finite) tuples.push_back({Fq{a}, Fq{b}, pt.x, pt.y});
        }
    std::size_t fixed = 0;
    for (unsigned k = 0; k < f.e(); ++k)
        for (std::uint32_t uc = 1; uc < f.q(); ++uc) {
            Fq u{uc};
            Fq u2 = f.mul(u, u), u3 = f.mul(u2, u), u4 = f.mul(u2, u2), u6 = f.mul(u4, u2);
            for (const auto& t : tuples) {
                if (f.mul(u4, f.frobenius(t[0], k)) == t[0] && f.mul(u6, f.frobenius(t[1], k)) == t[1] &&
                    f.mul(u2, f.frobenius(t[2], k)) == t[2] && f.mul(u3, f.frobenius(t[3], k)) == t[3])
                    ++fixed;
            }
        }
    std::size_t order = (f.q() - 1) * f.e();
    REQUIRE(fixed % order == 0);
    return fixed / order;
}

std::size_t affine_point_total(const FieldPtr& F) {
    std::size_t n = 0;
    for (std::uint32_t a = 0; a < F->q(); ++a)
        for (std::uint32_t b = 0; b < F->q(); ++b)
            if (is_nonsingular(*F, Fq{a}, Fq{b})) n += enumerate_points(curve_make(F, Fq{a}, Fq{b})).size() - 1;
    return n;
}

}  // namespace

TEST_CASE("prime power parsing") {
    CHECK(prime_power(5) == std::pair<std::uint32_t, std::uint32_t>{5, 1});
    CHECK(prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
    CHECK(prime_power(125) == std::pair<std::uint32_t, std::uint32_t>{5, 3});
    CHECK_THROWS_AS(prime_power(10), Error);
    CHECK_THROWS_AS(prime_power(1), Error);
}

TEST_CASE("class counts agree with Burnside and between partitions") {
    for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}, {5u, 2u}}) {
        CAPTURE(p);
        CAPTURE(e);
        FieldPtr F = field_make(p, e);
        ClassCount c = count_iso_classes(F);
        CHECK(c.partitions_agree);
        CHECK(c.classes == c.key_classes);
        CHECK(c.classes == burnside_count(F));
        CHECK(c.valid_pairs == affine_point_total(F));
        CHECK(std::accumulate(c.orbit_sizes.begin(), c.orbit_sizes.end(), std::size_t{0}) == c.valid_pairs);
        CHECK(std::is_sorted(c.representatives.begin(), c.representatives.end()));
        CHECK(c.representatives.size() == c.classes);
        // Each representative is its own key.
        for (const auto& k : c.representatives) {
            EllipticCurve E{F, Fq{k[0]}, Fq{k[1]}};
            CHECK(canonical_key(E, ECPoint::affine(Fq{k[2]}, Fq{k[3]})) == k);
        }
    }
}

TEST_CASE("class count does not depend on thread count") {
    ClassCount serial = count_iso_classes(7, 1);
    ClassCount threaded = count_iso_classes(7, 4);
    CHECK(serial.representatives == threaded.representatives);
    CHECK(serial.orbit_sizes == threaded.orbit_sizes);
}

TEST_CASE("scrambled groups land in their class") {
    for (std::uint64_t q : {5u, 7u}) {
        ClassCount c = count_iso_classes(q);
        FieldPtr F = field_make(static_cast<std::uint32_t>(q), 1);
        for (std::uint64_t i = 0; i < 50; ++i) {
            EGroupSpec g = random_egroup(F, 1000 * q + i);
            RecognitionReport r = recognize(scramble(flatten_to_prime(g.b), i), i);
            REQUIRE(r.status == RecognitionStatus::Elliptic);
            CHECK(r.key == canonical_key(g.curve, g.point));
            CHECK(std::binary_search(c.representatives.begin(), c.representatives.end(), r.key));
        }
    }
}

TEST_CASE("survey tallies") {
    SurveyRow row = adjoint_survey(5, 40, 3);
    std::size_t total = 0;
    for (auto n : row.counts) total += n;
    CHECK(total == 40);
    CHECK(row.samples == 40);
    CHECK(row.count(StarType::Other) == 0);
    CHECK(row.without_decomposition >= row.unitary_without_decomposition);
    // Decomposable exactly for the split types.
    CHECK(40 - row.without_decomposition == row.count(StarType::Exchange) + row.count(StarType::Symplectic2));

    SurveyRow again = adjoint_survey(5, 40, 3, 4);
    CHECK(again.counts == row.counts);
    CHECK(again.rejected == row.rejected);

    FieldPtr F = field_make(5, 1);
    auto b = survey_sample(F, 3, 7);
    CHECK(b.is_skew());
    CHECK(is_smooth(pfaffian6(b)));
    CHECK(b == survey_sample(F, 3, 7));
}

TEST_CASE("timing harness") {
    auto sizes = timing_sizes(4000);
    CHECK(sizes.front() == 5);
    CHECK(sizes.back() <= 4000);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        CHECK(is_prime(sizes[i]));
        CHECK(sizes[i] > sizes[i - 1]);
    }
    auto rows = timing_harness({5, 7}, 0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].q == 5);
    CHECK(rows[0].recognize_ms + rows[0].isotest_ms < 1000.0);
}

TEST_CASE("every pair is pseudo-isometric to its class representative") {
    for (std::uint64_t q : {5u, 7u}) {
        FieldPtr F = field_make(static_cast<std::uint32_t>(q), 1);
        ClassCount c = count_iso_classes(F);
        std::size_t checked = 0;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                if (!is_nonsingular(*F, Fq{a}, Fq{b})) continue;
                EllipticCurve E = curve_make(F, Fq{a}, Fq{b});
                for (const auto& p : enumerate_points(E)) {
                    if (!p.finite) continue;
                    ClassKey k = canonical_key(E, p);
                    REQUIRE(std::binary_search(c.representatives.begin(), c.representatives.end(), k));
                    TensorHandle t = flatten_to_prime(b_matrix(E, p));
                    TensorHandle r = flatten_to_prime(
                        b_matrix(curve_make(F, Fq{k[0]}, Fq{k[1]}), ECPoint::affine(Fq{k[2]}, Fq{k[3]})));
                    IsoCoset iso = iso_coset(t, r);
                    REQUIRE(iso.isomorphic);
                    CHECK(verify_pseudo_isometry(t, r, iso.witness->v, iso.witness->t));
                    ++checked;
                }
            }
        CHECK(checked == c.valid_pairs);
    }
}
