#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "egroups/errors.hpp"
#include "egroups/pipeline.hpp"

using namespace egroups;

namespace {

struct Instance {
    EllipticCurve e;
    ECPoint p;
};

Instance random_instance(const FieldPtr& F, Rng& rng) {
    for (;;) {
        Fq a = F->element(rng.below(F->q())), b = F->element(rng.below(F->q()));
        if (!is_nonsingular(*F, a, b)) continue;
        auto E = curve_make(F, a, b);
        auto pts = enumerate_points(E);
        if (pts.size() < 2) continue;
        return {E, pts[1 + rng.below(pts.size() - 1)]};
    }
}

TensorHandle anonymous(const Instance& in, std::uint64_t seed) {
    return scramble(flatten_to_prime(b_matrix(in.e, in.p)), seed);
}

// Orbit oracle for the class relation: all (a, b, x, y) reachable by scalings and twists.
std::set<ClassKey> orbit(const EllipticCurve& e, const ECPoint& p) {
    std::set<ClassKey> out;
    const Field& f = *e.field;
    for (unsigned k = 0; k < f.e(); ++k)
        for (std::uint32_t uc = 1; uc < f.q(); ++uc) {
            auto se = scale_curve(twist_curve(e, k), Fq{uc});
            auto sp = scale_point(e, twist_point(e, p, k), Fq{uc});
            out.insert({se.a.v, se.b.v, sp.x.v, sp.y.v});
        }
    return out;
}

Matrix flat_pair_v(const PseudoIsometry& g) { return flatten_matrix(g.v); }
Matrix flat_pair_t(const PseudoIsometry& g) { return flatten_matrix(g.t); }

}  // namespace

TEST_CASE("canonical key is the orbit minimum") {
    Rng rng(1);
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        for (int i = 0; i < 10; ++i) {
            auto in = random_instance(F, rng);
            auto orb = orbit(in.e, in.p);
            CHECK(canonical_key(in.e, in.p) == *orb.begin());
            Fq u = F->element(1 + rng.below(F->q() - 1));
            auto e2 = scale_curve(twist_curve(in.e, F->e() - 1), u);
            auto p2 = scale_point(in.e, twist_point(in.e, in.p, F->e() - 1), u);
            CHECK(canonical_key(e2, p2) == canonical_key(in.e, in.p));
        }
    }
}

TEST_CASE("recognition of scrambled E-group tensors") {
    Rng rng(2);
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(11, 1), field_make(5, 2), field_make(7, 2)}) {
        for (int i = 0; i < 4; ++i) {
            auto in = random_instance(F, rng);
            auto t = anonymous(in, 100 + i);
            auto rep = recognize(t, i);
            REQUIRE(rep.status == RecognitionStatus::Elliptic);
            CHECK(rep.field->q() == F->q());
            CHECK(rep.key == canonical_key(in.e, in.p));
            CHECK(rep.star == (in.p.y.v ? StarType::Exchange : StarType::Symplectic2));
            CHECK(verify_pseudo_isometry(flatten_to_prime(b_matrix(*rep.curve, rep.point)), t, rep.to_input.v,
                                         rep.to_input.t));
        }
    }
}

TEST_CASE("flex choice does not change the class key") {
    Rng rng(3);
    for (auto F : {field_make(7, 1), field_make(13, 1), field_make(5, 2)}) {
        int tried = 0;
        for (int i = 0; i < 40 && tried < 3; ++i) {
            auto in = random_instance(F, rng);
            auto t = anonymous(in, i);
            auto rep = recognize(t);
            REQUIRE(rep.status == RecognitionStatus::Elliptic);
            if (rep.flex_count < 2) continue;
            ++tried;
            for (std::size_t k = 1; k < rep.flex_count; ++k) CHECK(recognize(t, 0, k).key == rep.key);
        }
    }
}

TEST_CASE("recognition failures") {
    auto P = field_make(7, 1);
    Rng rng(4);
    // dim T = 2
    TensorHandle two{P, 4, {}};
    for (int k = 0; k < 2; ++k) {
        Matrix m = random_matrix(P, 4, 4, rng);
        two.forms.push_back(m - m.transpose());
    }
    CHECK(recognize(two).status == RecognitionStatus::WrongDims);
    // not alternating
    TensorHandle sym{P, 6, {Matrix::identity(P, 6), Matrix::identity(P, 6), Matrix::identity(P, 6)}};
    CHECK(recognize(sym).status == RecognitionStatus::NotClass2Shape);
    // nodal cubic y^2 = (x - 1)^2 (x + 2) through (0, 3)
    EllipticCurve nodal{P, P->from_int(-3), P->from_int(2)};
    ECPoint q = ECPoint::affine(Fq{0}, Fq{3});
    REQUIRE(on_curve(nodal, q));
    auto t = scramble(flatten_to_prime(b_matrix(nodal, q)), 5);
    CHECK(recognize(t).status == RecognitionStatus::PfaffianSingular);
    // a random smooth skew matrix whose adjoint is unitary
    auto P5 = field_make(5, 1);
    bool found = false;
    for (int i = 0; i < 300 && !found; ++i) {
        LinearFormMatrix B = LinearFormMatrix::zero(P5, 6, 6);
        for (auto& s : B.slices) {
            Matrix m = random_matrix(P5, 6, 6, rng);
            s = m - m.transpose();
        }
        if (!is_smooth(pfaffian6(B)) || rational_flexes(pfaffian6(B)).empty()) continue;
        if (star_type(adjoint(B)).type != StarType::Unitary1) continue;
        found = true;
        CHECK(recognize(to_tensor(B)).status == RecognitionStatus::NotDecomposable);
    }
    CHECK(found);
}

TEST_CASE("recover_point") {
    Rng rng(5);
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        for (int i = 0; i < 6; ++i) {
            auto in = random_instance(F, rng);
            auto J = j_matrix(in.e, in.p);
            CHECK(recover_point(J, in.e).point == in.p);
            Matrix X = random_invertible(F, 3, rng), Y = random_invertible(F, 3, rng);
            CHECK(recover_point(congruence(J, X, Y), in.e).point == in.p);
            CHECK(recover_point(J.transpose(), in.e).point == neg(in.e, in.p));
        }
    }
}

TEST_CASE("pseudo-isometry generators") {
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        for (std::uint32_t a = 0; a < F->q(); a += 2)
            for (std::uint32_t b = 0; b < F->q(); b += 3) {
                if (!is_nonsingular(*F, Fq{a}, Fq{b})) continue;
                auto E = curve_make(F, Fq{a}, Fq{b});
                auto pts = enumerate_points(E);
                for (std::size_t i = 1; i < pts.size(); i += 3) {
                    auto gens = psi_isom_generators(E, pts[i]);
                    auto flat = flatten_to_prime(b_matrix(E, pts[i]));
                    std::size_t expected = 3 + torsion(E, 3).size() - 1 + (aut_O(E).size() / orbit_of_point(E, pts[i]).size() - 1);
                    CHECK(gens.size() == expected);
                    for (const auto& g : gens) CHECK(verify_pseudo_isometry(flat, flat, flat_pair_v(g), flat_pair_t(g)));
                    if (pts[i].y.v) {
                        // the swap squares to a scalar pair
                        const auto& s = gens[2];
                        CHECK((s.v * s.v).is_scalar());
                        CHECK((s.t * s.t).is_scalar());
                    }
                }
            }
    }
}

TEST_CASE("GL2 block generators generate GL2(5)") {
    auto F = field_make(5, 1);
    auto E = curve_make(F, F->from_int(-2), F->zero());
    auto gens = psi_isom_generators(E, ECPoint::affine(Fq{0}, Fq{0}));
    // 2x2 shadows of the first three generators (blocks are scalar)
    std::vector<Matrix> small;
    for (int i = 0; i < 3; ++i) {
        Matrix m(F, 2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Matrix blk = gens[i].v.block(3 * r, 3 * c, 3, 3);
                REQUIRE(blk.is_scalar());
                m(r, c) = blk(0, 0);
            }
        small.push_back(m);
    }
    std::set<std::vector<Fq>> seen{Matrix::identity(F, 2).data()};
    std::vector<Matrix> frontier{Matrix::identity(F, 2)};
    while (!frontier.empty()) {
        Matrix m = frontier.back();
        frontier.pop_back();
        for (const auto& g : small) {
            Matrix n = g * m;
            if (seen.insert(n.data()).second) frontier.push_back(n);
        }
    }
    CHECK(seen.size() == 480);
}

TEST_CASE("orders") {
    auto F5 = field_make(5, 1);
    auto E = curve_make(F5, F5->from_int(-2), F5->zero());
    auto o = psi_isom_order(E, ECPoint::affine(Fq{0}, Fq{0}));
    CHECK(o.aut_ratio == 4);
    CHECK(o.tail == "GL2");
    CHECK(o.tail_value == "480");
    CHECK(o.torsion3 == torsion(E, 3).size());
    CHECK(o.value == std::to_string(4 * 480 * o.torsion3));
    auto full = aut_order(E, ECPoint::affine(Fq{0}, Fq{0}));
    CHECK(full.q_power == 18);
    CHECK(full.galois == 1);
    std::uint64_t p18 = 1;
    for (int i = 0; i < 18; ++i) p18 *= 5;
    CHECK(full.value == std::to_string(p18 * 4 * 480 * o.torsion3));

    auto F7 = field_make(7, 1);
    for (std::uint32_t a = 1; a < 7; ++a)
        for (std::uint32_t b = 1; b < 7; ++b) {
            if (!is_nonsingular(*F7, Fq{a}, Fq{b})) continue;
            auto C = curve_make(F7, Fq{a}, Fq{b});
            for (const auto& p : enumerate_points(C)) {
                if (!p.finite || !p.y.v) continue;
                auto oc = psi_isom_order(C, p);
                CHECK(oc.aut_ratio == 1);
                CHECK(oc.tail == "2(q-1)^2");
                CHECK(oc.tail_value == "72");
            }
        }

    auto G = field_make(5, 2, std::vector<std::uint32_t>{2, 4, 1});
    Fq al = G->alpha();
    auto ex = curve_make(G, al, al);
    CHECK(aut_order(ex, ECPoint::affine(G->pow(al, 3), al)).galois == 1);
    auto F25 = field_make(5, 2);
    auto E25 = curve_make(F25, F25->from_int(-2), F25->zero());
    CHECK(aut_order(E25, ECPoint::affine(Fq{0}, Fq{0})).galois == 2);
}

TEST_CASE("isomorphism cosets") {
    Rng rng(6);
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        for (int i = 0; i < 3; ++i) {
            auto in = random_instance(F, rng);
            auto t = flatten_to_prime(b_matrix(in.e, in.p));
            auto s = scramble(t, 70 + i);
            auto c = iso_coset(t, s);
            REQUIRE(c.isomorphic);
            REQUIRE(c.witness);
            CHECK(verify_pseudo_isometry(t, s, c.witness->v, c.witness->t));
            CHECK_FALSE(c.generators.empty());
            for (const auto& g : c.generators) CHECK(verify_pseudo_isometry(t, t, g.v, g.t));
        }
    }
    // different field sizes
    Rng r2(7);
    auto a = random_instance(field_make(5, 1), r2), b = random_instance(field_make(7, 1), r2);
    auto c = iso_coset(flatten_to_prime(b_matrix(a.e, a.p)), flatten_to_prime(b_matrix(b.e, b.p)));
    CHECK_FALSE(c.isomorphic);
    CHECK(c.reason == "centroid mismatch");
}

TEST_CASE("Frobenius-twisted pair over GF(25)") {
    auto G = field_make(5, 2, std::vector<std::uint32_t>{2, 4, 1});
    Fq al = G->alpha();
    auto E = curve_make(G, al, al);
    ECPoint P = ECPoint::affine(G->pow(al, 3), al);
    auto t = flatten_to_prime(b_matrix(E, P));
    auto s = flatten_to_prime(b_matrix(twist_curve(E, 1), twist_point(E, P, 1)));
    auto c = iso_coset(t, scramble(s, 3));
    REQUIRE(c.isomorphic);
    CHECK(c.witness->sigma_power == 1);
    CHECK(c.galois == std::vector<unsigned>{0});
}

TEST_CASE("non-isomorphic pairs over GF(5)") {
    auto F = field_make(5, 1);
    std::map<ClassKey, Instance> reps;
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) {
            if (!is_nonsingular(*F, Fq{a}, Fq{b})) continue;
            auto E = curve_make(F, Fq{a}, Fq{b});
            for (const auto& p : enumerate_points(E))
                if (p.finite) reps.emplace(canonical_key(E, p), Instance{E, p});
        }
    std::vector<Instance> list;
    for (auto& [k, v] : reps) list.push_back(v);
    for (std::size_t i = 0; i + 1 < list.size(); i += 4) {
        auto t1 = scramble(flatten_to_prime(b_matrix(list[i].e, list[i].p)), i);
        auto t2 = scramble(flatten_to_prime(b_matrix(list[i + 1].e, list[i + 1].p)), i + 1);
        CHECK_FALSE(iso_coset(t1, t2).isomorphic);
    }
}
