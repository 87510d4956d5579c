#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <sstream>

#include "egroups/egroup.hpp"
#include "egroups/errors.hpp"

using namespace egroups;

namespace {

FieldPtr gf25_example() { return field_make(5, 2, std::vector<std::uint32_t>{2, 4, 1}); }

// Parses "3x1 - x2 + 2z1 + z2" into coefficients of x1, x2, y1, y2, z1, z2 mod p.
std::array<int, 6> parse_form(const std::string& s, int p) {
    std::array<int, 6> out{};
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') sign = t[i++] == '-' ? -1 : 1;
        int coef = 0;
        bool digits = false;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            coef = coef * 10 + (t[i++] - '0');
            digits = true;
        }
        if (!digits) coef = 1;
        if (i >= t.size()) break;  // bare constant "0"
        int var = (t[i] == 'x' ? 0 : t[i] == 'y' ? 2 : 4) + (t[i + 1] - '1');
        i += 2;
        out[var] = ((out[var] + sign * coef) % p + p) % p;
    }
    return out;
}

// 6x6 J-bar over GF(5) from rows of "|"-separated entries.
std::vector<Matrix> parse_jbar(const FieldPtr& P, const std::vector<std::string>& rows) {
    std::vector<Matrix> forms(6, Matrix(P, 6, 6));
    for (std::size_t r = 0; r < 6; ++r) {
        std::stringstream ss(rows[r]);
        std::string cell;
        for (std::size_t c = 0; std::getline(ss, cell, '|'); ++c) {
            auto co = parse_form(cell, 5);
            for (int v = 0; v < 6; ++v) forms[v](r, c) = Fq{static_cast<std::uint32_t>(co[v])};
        }
    }
    return forms;
}

const std::vector<std::string> kJbar = {
    "x1 + 2z1 + z2 | x2 + 3z1 + 3z2 | y1 - z2 | y2 + 2z1 - z2 | 0 | 0",
    "x2 + 3z1 + 3z2 | 3x1 + x2 - z1 + z2 | y2 + 2z1 - z2 | 3y1 + y2 + 2z1 + z2 | 0 | 0",
    "y1 + z2 | y2 + 3z1 + z2 | 3x1 - x2 + 2z1 + z2 | 2x1 + 2x2 + 3z1 + 3z2 | x1 | x2",
    "y2 + 3z1 + z2 | 3y1 + y2 + 3z1 - z2 | 2x1 + 2x2 + 3z1 + 3z2 | x1 - x2 - z1 + z2 | x2 | 3x1 + x2",
    "0 | 0 | x1 | x2 | - z1 | -z2",
    "0 | 0 | x2 | 3x1 + x2 | -z2 | 2z1 - z2",
};

const std::vector<std::string> kSigmaJbar = {
    "x1 + 3z1 - z2 | x2 + 2z1 + 2z2 | y1 - z1 + z2 | y2 + 3z1 | 0 | 0",
    "x2 + 2z1 + 2z2 | 3x1 + x2 + z1 - z2 | y2 + 3z1 | 3y1 + y2 + 3z2 | 0 | 0",
    "y1 + z1 - z2 | y2 + 2z1 | 2x1 + x2 + 3z1 - z2 | 3x1 + 3x2 + 2z1 + 2z2 | x1 | x2",
    "y2 + 2z1 | 3y1 + y2 + 2z2 | 3x1 + 3x2 + 2z1 + 2z2 | -x1 + x2 + z1 - z2 | x2 | 3x1 + x2",
    "0 | 0 | x1 | x2 | - z1 | -z2",
    "0 | 0 | x2 | 3x1 + x2 | -z2 | 2z1 - z2",
};

}  // namespace

TEST_CASE("J_{E,P} entries and determinant") {
    auto F = field_make(5, 1);
    auto E = curve_make(F, F->one(), F->one());
    auto J = j_matrix(E, ECPoint::affine(Fq{0}, Fq{1}));
    // first row (y1, y2 - y3, 0)
    CHECK(J.slices[0](0, 0) == F->one());
    CHECK(J.slices[1](0, 1) == F->one());
    CHECK(J.slices[2](0, 1) == F->from_int(-1));
    CHECK(J.slices[2](0, 0).v == 0);
    for (int k = 0; k < 3; ++k) CHECK(J.slices[k](0, 2).v == 0);
    CHECK_THROWS_AS(j_matrix(E, ECPoint::identity()), Error);

    for (auto G : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        Rng rng(G->q());
        for (int t = 0; t < 10; ++t) {
            Fq a = G->element(rng.below(G->q())), b = G->element(rng.below(G->q()));
            if (!is_nonsingular(*G, a, b)) continue;
            auto C = curve_make(G, a, b);
            auto pts = enumerate_points(C);
            if (pts.size() < 2) continue;
            auto P = pts[1 + rng.below(pts.size() - 1)];
            auto JJ = j_matrix(C, P);
            auto c = proportionality(det3(JJ), weierstrass_cubic(G, a, b));
            CHECK(c.has_value());
            CHECK(JJ.transpose() == j_matrix(C, neg(C, P)));
        }
    }
}

TEST_CASE("Hessian representative") {
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        for (std::uint32_t a = 0; a < F->q(); ++a)
            for (std::uint32_t b = 0; b < F->q(); b += 3) {
                if (!is_nonsingular(*F, Fq{a}, Fq{b})) continue;
                auto E = curve_make(F, Fq{a}, Fq{b});
                for (const auto& T : torsion(E, 2)) {
                    if (T.is_identity()) continue;
                    auto H = hessian_matrix_rep(E, T);
                    CHECK(H.transpose() == H);
                    CHECK(adjoint_module(j_matrix(E, T), H).dim() >= 1);
                    auto dh = det3(H);
                    int checked = 0;
                    for (const auto& R : enumerate_points(E)) {
                        if (checked++ == 20) break;
                        CHECK(dh.eval(R.projective(*F)).v == 0);
                    }
                }
            }
    }
    auto F = field_make(5, 1);
    auto E = curve_make(F, F->one(), F->one());
    CHECK_THROWS_AS(hessian_matrix_rep(E, ECPoint::affine(Fq{0}, Fq{1})), Error);
}

TEST_CASE("B_{E,P} block shape and Pfaffian") {
    auto F = field_make(7, 1);
    auto E = curve_make(F, Fq{3}, Fq{2});
    for (const auto& P : enumerate_points(E)) {
        if (P.is_identity()) continue;
        auto B = b_matrix(E, P);
        CHECK(B.is_skew());
        for (const auto& s : B.slices) {
            CHECK(s.block(0, 0, 3, 3).is_zero());
            CHECK(s.block(3, 3, 3, 3).is_zero());
        }
        auto c = proportionality(pfaffian6(B), weierstrass_cubic(F, E.a, E.b));
        REQUIRE(c);
        CHECK(c->v != 0);
    }
    CHECK_THROWS_AS(egroup_make(E, ECPoint::identity()), Error);
    CHECK_THROWS_AS(egroup_make(E, ECPoint::affine(Fq{1}, Fq{1})), Error);
}

TEST_CASE("Baer group laws") {
    for (auto F : {field_make(5, 1), field_make(7, 1), field_make(5, 2)}) {
        Rng rng(F->q() + 100);
        auto E = curve_make(F, F->one(), F->from_int(3));
        auto pts = enumerate_points(E);
        BaerGroup G(to_tensor(b_matrix(E, pts.back())));
        for (int i = 0; i < 50; ++i) {
            auto g = G.random(rng), h = G.random(rng), k = G.random(rng);
            CHECK(G.mul(g, G.inv(g)) == G.identity());
            CHECK(G.pow(g, F->p()) == G.identity());
            CHECK(G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)));
            auto c = G.comm(g, h);
            CHECK(c.v == Vec(6));
            CHECK(c.w == G.tensor().eval(g.v, h.v));
            // central commutators
            CHECK(G.mul(c, k) == G.mul(k, c));
            // bilinearity of the commutator in the first slot
            Fq s = F->element(1 + rng.below(F->q() - 1));
            GroupElement gs{g.v, Vec(3)};
            for (auto& x : gs.v) x = F->mul(x, s);
            auto cs = G.comm(gs, h);
            for (int j = 0; j < 3; ++j) CHECK(cs.w[j] == F->mul(s, c.w[j]));
        }
    }
}

TEST_CASE("flattening over GF(25) matches the worked example") {
    auto G = gf25_example();
    Fq alpha = G->alpha();
    auto E = curve_make(G, alpha, alpha);
    ECPoint P = ECPoint::affine(G->pow(alpha, 3), alpha);
    auto P5 = field_make(5, 1);

    auto jbar = flatten_to_prime(j_matrix(E, P));
    auto expect = parse_jbar(P5, kJbar);
    for (int v = 0; v < 6; ++v) CHECK(jbar.forms[v] == expect[v]);
    auto sjbar = flatten_to_prime(j_matrix(twist_curve(E, 1), twist_point(E, P, 1)));
    auto sexpect = parse_jbar(P5, kSigmaJbar);
    for (int v = 0; v < 6; ++v) CHECK(sjbar.forms[v] == sexpect[v]);

    Matrix X(P5, 2, 2, {1, 1, 0, -1});
    Matrix D = block_diag({X, X, X});
    auto s = flatten_to_prime(b_matrix(twist_curve(E, 1), twist_point(E, P, 1)));
    auto t = flatten_to_prime(b_matrix(E, P));
    // D^T Jbar_i D = sum_j D_ji sigma(Jbar)_j, i.e. the linear forms are substituted as a row vector
    for (int j = 0; j < 6; ++j) {
        Matrix acc(P5, 6, 6);
        for (int i = 0; i < 6; ++i) acc = acc + (D.transpose() * jbar.forms[i] * D).scaled(D(j, i));
        CHECK(acc == sjbar.forms[j]);
    }
    CHECK(verify_pseudo_isometry(s, t, block_diag({D, D}), D));
    // D is the Frobenius on each coordinate
    CHECK(flatten_frobenius(G, 3, 1) == D);
    CHECK(verify_pseudo_isometry(t, s, flatten_frobenius(G, 6, 1), flatten_frobenius(G, 3, 1)));
}

TEST_CASE("flattening of matrices and congruences") {
    Rng rng(9);
    for (auto F : {field_make(7, 1), field_make(5, 2), field_make(5, 3)}) {
        Matrix X = random_invertible(F, 6, rng), Y = random_matrix(F, 6, 6, rng);
        CHECK(flatten_matrix(X * Y) == flatten_matrix(X) * flatten_matrix(Y));
        CHECK(flatten_matrix(Matrix::identity(F, 6)).is_identity());
        if (F->p() < 5) continue;
        auto E = curve_make(F, F->one(), F->one());
        auto B = b_matrix(E, enumerate_points(E).back());
        Matrix Z = random_invertible(F, 3, rng);
        auto S = congruence(substitute(B, Z), X, X);
        // S(y) = X^T B(Z y) X  =>  (flat X, flat Z^-T) maps flat S to flat B
        CHECK(verify_pseudo_isometry(flatten_to_prime(S), flatten_to_prime(B), flatten_matrix(X),
                                     flatten_matrix(inverse_or_throw(Z).transpose())));
    }
    auto F5 = field_make(5, 1);
    auto E = curve_make(F5, F5->one(), F5->one());
    auto B = b_matrix(E, ECPoint::affine(Fq{0}, Fq{1}));
    auto flat = flatten_to_prime(B);
    for (int k = 0; k < 3; ++k) CHECK(flat.forms[k] == B.slices[k]);
}

TEST_CASE("scrambler") {
    auto F = field_make(7, 1);
    auto E = curve_make(F, Fq{2}, Fq{3});
    auto t = flatten_to_prime(b_matrix(E, enumerate_points(E).back()));
    auto a = scramble(t, 5), b = scramble(t, 5), c = scramble(t, 6);
    CHECK(a.forms == b.forms);
    CHECK_FALSE(a.forms == c.forms);
    CHECK(a.is_alternating());
    auto sc = scramble_with_transform(t, 5);
    CHECK(verify_pseudo_isometry(sc.tensor, t, sc.x, inverse_or_throw(sc.z).transpose()));
}
