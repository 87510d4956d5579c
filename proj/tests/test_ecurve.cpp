#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "egroups/ecurve.hpp"
#include "egroups/errors.hpp"

using namespace egroups;

namespace {

FieldPtr gf25_example() { return field_make(5, 2, std::vector<std::uint32_t>{2, 4, 1}); }

ECPoint random_point(const EllipticCurve& e, Rng& rng) {
    auto pts = enumerate_points(e);
    return pts[rng.below(pts.size())];
}

// Closed-form oracle for curve-with-point isomorphism: u^2 = x'/s(x) (or via
// a, b when x = 0), then u itself from the y-coordinate or the remaining square roots.
bool iso_closed_form(const EllipticCurve& e, const ECPoint& p, const EllipticCurve& e2, const ECPoint& p2,
                     unsigned k) {
    const Field& f = *e.field;
    EllipticCurve se = twist_curve(e, k);
    ECPoint sp = twist_point(e, p, k);
    std::vector<Fq> cands;
    if (sp.x.v) {
        if (!p2.x.v) return false;
        for (Fq u : f.nth_roots(f.div(p2.x, sp.x), 2)) cands.push_back(u);
    } else if (sp.y.v) {
        if (!p2.y.v) return false;
        for (Fq u : f.nth_roots(f.div(p2.y, sp.y), 3)) cands.push_back(u);
    } else if (se.a.v) {
        if (!e2.a.v) return false;
        for (Fq u : f.nth_roots(f.div(e2.a, se.a), 4)) cands.push_back(u);
    } else {
        if (!e2.b.v) return false;
        for (Fq u : f.nth_roots(f.div(e2.b, se.b), 6)) cands.push_back(u);
    }
    for (Fq u : cands)
        if (scale_curve(se, u).a == e2.a && scale_curve(se, u).b == e2.b && scale_point(se, sp, u) == p2) return true;
    return false;
}

}  // namespace

TEST_CASE("curve construction") {
    auto F5 = field_make(5, 1);
    CHECK_NOTHROW(curve_make(F5, F5->from_int(-2), F5->zero()));
    try {
        curve_make(F5, F5->zero(), F5->zero());
        FAIL("singular curve accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularCurve);
    }
    auto F7 = field_make(7, 1);
    CHECK_NOTHROW(curve_make(F7, F7->one(), F7->one()));
}

TEST_CASE("group law") {
    for (auto [p, e] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {5, 2}, {13, 1}}) {
        auto F = field_make(p, e);
        Rng rng(p + e);
        for (int c = 0; c < 3; ++c) {
            Fq a, b;
            do {
                a = F->element(rng.below(F->q()));
                b = F->element(rng.below(F->q()));
            } while (!is_nonsingular(*F, a, b));
            auto E = curve_make(F, a, b);
            auto pts = enumerate_points(E);
            double q = F->q();
            CHECK(std::abs(double(pts.size()) - (q + 1)) <= 2 * std::sqrt(q));
            for (const auto& pt : pts) CHECK(on_curve(E, pt));
            CHECK(std::is_sorted(pts.begin(), pts.end()));
            CHECK(pts.front().is_identity());
            for (int t = 0; t < 100; ++t) {
                auto x = random_point(E, rng), y = random_point(E, rng), z = random_point(E, rng);
                CHECK(add(E, x, ECPoint::identity()) == x);
                CHECK(add(E, x, neg(E, x)).is_identity());
                CHECK(add(E, x, y) == add(E, y, x));
                CHECK(add(E, add(E, x, y), z) == add(E, x, add(E, y, z)));
                CHECK(on_curve(E, add(E, x, y)));
            }
            for (const auto& pt : pts) CHECK(smul(E, static_cast<std::int64_t>(pts.size()), pt).is_identity());
        }
    }
    auto F = field_make(5, 1);
    auto E = curve_make(F, F->from_int(-2), F->zero());
    CHECK_THROWS_AS(add(E, ECPoint::affine(Fq{1}, Fq{1}), ECPoint::identity()), Error);
    CHECK(smul(E, 2, ECPoint::affine(Fq{0}, Fq{0})).is_identity());
}

TEST_CASE("torsion subgroups") {
    auto F5 = field_make(5, 1);
    auto E = curve_make(F5, F5->from_int(-2), F5->zero());
    auto t2 = torsion(E, 2);
    CHECK(t2 == std::vector<ECPoint>{ECPoint::identity(), ECPoint::affine(Fq{0}, Fq{0})});
    auto F25 = field_make(5, 2);
    auto E25 = curve_make(F25, F25->from_int(-2), F25->zero());
    CHECK(torsion(E25, 2).size() == 4);
    // oracle: scan all points for [m]P = O
    for (auto F : {F5, field_make(7, 1), F25}) {
        for (std::uint32_t a = 0; a < F->q(); a += 3)
            for (std::uint32_t b = 0; b < F->q(); b += 2) {
                if (!is_nonsingular(*F, Fq{a}, Fq{b})) continue;
                auto C = curve_make(F, Fq{a}, Fq{b});
                for (unsigned m : {2u, 3u}) {
                    std::vector<ECPoint> oracle;
                    for (const auto& pt : enumerate_points(C))
                        if (smul(C, m, pt).is_identity()) oracle.push_back(pt);
                    CHECK(torsion(C, m) == oracle);
                }
                auto n3 = torsion(C, 3).size();
                CHECK((n3 == 1 || n3 == 3 || n3 == 9));
            }
    }
}

TEST_CASE("j-invariants") {
    auto F = field_make(7, 1);
    CHECK(j_invariant(curve_make(F, F->one(), F->zero())) == F->from_int(1728));
    CHECK(j_invariant(curve_make(F, F->zero(), F->one())).v == 0);
    auto G = gf25_example();
    Fq alpha = G->alpha();
    auto E = curve_make(G, alpha, alpha);
    CHECK(j_invariant(E) == G->sub(alpha, G->one()));
    CHECK(j_invariant(twist_curve(E, 1)) == G->neg(alpha));
}

TEST_CASE("automorphisms and orbits") {
    auto F5 = field_make(5, 1);
    CHECK(aut_O(curve_make(F5, F5->one(), F5->one())).size() == 2);
    auto E = curve_make(F5, F5->from_int(-2), F5->zero());
    auto aut = aut_O(E);
    CHECK(aut.size() == 4);
    for (const auto& x : aut) {
        CHECK(x.matrix(0, 0) == F5->pow(x.omega, 2));
        CHECK(x.matrix(1, 1) == F5->pow(x.omega, 3));
    }
    CHECK(aut_O(curve_make(field_make(7, 1), Fq{0}, Fq{1})).size() == 6);
    CHECK(orbit_of_point(E, ECPoint::affine(Fq{0}, Fq{0})).size() == 1);

    auto F7 = field_make(7, 1);
    auto G = curve_make(F7, Fq{1}, Fq{1});
    for (const auto& pt : enumerate_points(G)) {
        if (pt.is_identity()) continue;
        auto orb = orbit_of_point(G, pt);
        CHECK(aut_O(G).size() % orb.size() == 0);
        if (pt.y.v) CHECK(orb == std::vector<ECPoint>{std::min(pt, neg(G, pt)), std::max(pt, neg(G, pt))});
    }
}

TEST_CASE("curve-with-point isomorphisms") {
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        Rng rng(F->q());
        for (int t = 0; t < 20; ++t) {
            Fq a, b;
            do {
                a = F->element(rng.below(F->q()));
                b = F->element(rng.below(F->q()));
            } while (!is_nonsingular(*F, a, b));
            auto E = curve_make(F, a, b);
            auto pts = enumerate_points(E);
            if (pts.size() < 2) continue;
            ECPoint P = pts[1 + rng.below(pts.size() - 1)];
            auto self = iso_with_point(E, P, E, P, 0);
            REQUIRE(self);
            Fq u0 = F->element(1 + rng.below(F->q() - 1));
            unsigned k = static_cast<unsigned>(rng.below(F->e()));
            auto E2 = scale_curve(twist_curve(E, k), u0);
            auto P2 = scale_point(E, twist_point(E, P, k), u0);
            auto iso = iso_with_point(E, P, E2, P2, k);
            REQUIRE(iso);
            CHECK(scale_curve(twist_curve(E, k), iso->u).a == E2.a);
            CHECK(scale_point(E, twist_point(E, P, k), iso->u) == P2);
            // compare with the closed-form oracle on random targets
            auto Q = pts[1 + rng.below(pts.size() - 1)];
            for (unsigned kk = 0; kk < F->e(); ++kk)
                CHECK(iso_with_point(E, P, E, Q, kk).has_value() == iso_closed_form(E, P, E, Q, kk));
            // symmetry
            auto back = iso_with_point(E2, P2, E, P, (F->e() - k) % F->e());
            CHECK(back.has_value());
        }
    }
}

TEST_CASE("Frobenius-twisted pairs over GF(25)") {
    auto G = gf25_example();
    Fq alpha = G->alpha();
    auto E = curve_make(G, alpha, alpha);
    ECPoint P = ECPoint::affine(G->pow(alpha, 3), alpha);
    REQUIRE(on_curve(E, P));
    CHECK_FALSE(iso_with_point(E, P, twist_curve(E, 1), twist_point(E, P, 1), 0));
    CHECK(galois_group_EP(E, P) == std::vector<unsigned>{0});

    auto F25 = field_make(5, 2);
    auto E2 = curve_make(F25, F25->from_int(-2), F25->zero());
    for (const auto& T : torsion(E2, 2)) {
        if (T.is_identity()) continue;
        CHECK(galois_group_EP(E2, T).size() == 2);
    }
    auto F5 = field_make(5, 1);
    auto E5 = curve_make(F5, F5->one(), F5->one());
    CHECK(galois_group_EP(E5, enumerate_points(E5)[1]) == std::vector<unsigned>{0});
}

TEST_CASE("translation by 3-torsion") {
    int curves = 0;
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(13, 1), field_make(5, 2)}) {
        for (std::uint32_t a = 0; a < F->q(); ++a)
            for (std::uint32_t b = 0; b < F->q(); ++b) {
                if (!is_nonsingular(*F, Fq{a}, Fq{b})) continue;
                auto E = curve_make(F, Fq{a}, Fq{b});
                auto t3 = torsion(E, 3);
                if (t3.size() < 3) continue;
                ++curves;
                for (const auto& Q : t3) {
                    if (Q.is_identity()) continue;
                    Matrix g = translation_matrix(E, Q);
                    CHECK((g * g * g).is_scalar());
                    Vec img = g.apply({F->zero(), F->one(), F->zero()});
                    CHECK(normalize_point(*F, {img[0], img[1], img[2]}) ==
                          normalize_point(*F, Q.projective(*F)));
                    for (const auto& R : enumerate_points(E)) {
                        auto src = R.projective(*F);
                        Vec gr = g.apply(Vec(src.begin(), src.end()));
                        CHECK(normalize_point(*F, {gr[0], gr[1], gr[2]}) ==
                              normalize_point(*F, add(E, R, Q).projective(*F)));
                    }
                }
                if (curves > 40) break;
            }
    }
    CHECK(curves > 0);
    auto F7 = field_make(7, 1);
    auto E = curve_make(F7, Fq{1}, Fq{1});
    CHECK_THROWS_AS(translation_matrix(E, enumerate_points(E)[1]), Error);
}
