#include "egroups/ecurve.hpp"

#include <algorithm>

#include "egroups/errors.hpp"

namespace egroups {

bool is_nonsingular(const Field& f, Fq a, Fq b) {
    Fq d = f.add(f.mul(f.from_int(4), f.pow(a, 3)), f.mul(f.from_int(27), f.mul(b, b)));
    return d.v != 0;
}

EllipticCurve curve_make(FieldPtr field, Fq a, Fq b) {
    if (!is_nonsingular(*field, a, b)) throw Error(ErrorKind::SingularCurve, "4a^3 + 27b^2 = 0");
    return {std::move(field), a, b};
}

Triple ECPoint::projective(const Field& f) const {
    if (!finite) return {f.zero(), f.one(), f.zero()};
    return {x, y, f.one()};
}

namespace {

Fq rhs(const EllipticCurve& e, Fq x) {
    const Field& f = *e.field;
    return f.add(f.mul(f.add(f.mul(x, x), e.a), x), e.b);
}

}  // namespace

bool on_curve(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) return true;
    return e.field->mul(p.y, p.y) == rhs(e, p.x);
}

ECPoint neg(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) return p;
    return ECPoint::affine(p.x, e.field->neg(p.y));
}

ECPoint add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
    if (!on_curve(e, p) || !on_curve(e, q)) throw Error(ErrorKind::PointNotOnCurve, "point not on curve");
    const Field& f = *e.field;
    if (!p.finite) return q;
    if (!q.finite) return p;
    Fq slope;
    if (p.x == q.x) {
        if (f.add(p.y, q.y).v == 0) return ECPoint::identity();
        Fq num = f.add(f.mul(f.from_int(3), f.mul(p.x, p.x)), e.a);
        slope = f.div(num, f.add(p.y, p.y));
    } else {
        slope = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
    }
    Fq x3 = f.sub(f.sub(f.mul(slope, slope), p.x), q.x);
    Fq y3 = f.sub(f.mul(slope, f.sub(p.x, x3)), p.y);
    return ECPoint::affine(x3, y3);
}

ECPoint smul(const EllipticCurve& e, std::int64_t k, const ECPoint& p) {
    ECPoint base = k < 0 ? neg(e, p) : p;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    ECPoint acc = ECPoint::identity();
    while (n) {
        if (n & 1) acc = add(e, acc, base);
        base = add(e, base, base);
        n >>= 1;
    }
    return acc;
}

std::vector<ECPoint> enumerate_points(const EllipticCurve& e) {
    const Field& f = *e.field;
    std::vector<ECPoint> out{ECPoint::identity()};
    for (std::uint32_t xc = 0; xc < f.q(); ++xc) {
        Fq x{xc};
        auto r = f.sqrt(rhs(e, x));
        if (!r) continue;
        if (!r->v) {
            out.push_back(ECPoint::affine(x, *r));
        } else {
            Fq s = f.neg(*r);
            out.push_back(ECPoint::affine(x, std::min(*r, s)));
            out.push_back(ECPoint::affine(x, std::max(*r, s)));
        }
    }
    return out;
}

std::vector<ECPoint> torsion(const EllipticCurve& e, unsigned m) {
    const Field& f = *e.field;
    std::vector<ECPoint> out{ECPoint::identity()};
    if (m == 2) {
        UniPoly c(e.field, {e.b, e.a, f.zero(), f.one()});
        for (Fq x : roots(c)) out.push_back(ECPoint::affine(x, f.zero()));
    } else if (m == 3) {
        // psi_3 = 3x^4 + 6a x^2 + 12b x - a^2
        UniPoly psi(e.field, {f.neg(f.mul(e.a, e.a)), f.mul(f.from_int(12), e.b), f.mul(f.from_int(6), e.a),
                              f.zero(), f.from_int(3)});
        for (Fq x : roots(psi)) {
            auto r = f.sqrt(rhs(e, x));
            if (!r) continue;
            Fq s = f.neg(*r);
            out.push_back(ECPoint::affine(x, std::min(*r, s)));
            if (s != *r) out.push_back(ECPoint::affine(x, std::max(*r, s)));
        }
    } else {
        throw Error(ErrorKind::BadInput, "torsion is implemented for m = 2, 3");
    }
    std::sort(out.begin(), out.end());
    return out;
}

Fq j_invariant(const EllipticCurve& e) {
    const Field& f = *e.field;
    Fq a3 = f.mul(f.from_int(4), f.pow(e.a, 3));
    Fq d = f.add(a3, f.mul(f.from_int(27), f.mul(e.b, e.b)));
    return f.div(f.mul(f.from_int(1728), a3), d);
}

std::vector<AutElement> aut_O(const EllipticCurve& e) {
    const Field& f = *e.field;
    unsigned n = 2;
    if (!e.b.v) n = 4;
    if (!e.a.v) n = 6;
    std::vector<AutElement> out;
    for (Fq w : roots_of_unity(f, n)) {
        Fq w2 = f.mul(w, w);
        out.push_back({w, Matrix::diagonal(e.field, {w2, f.mul(w2, w), f.one()})});
    }
    return out;
}

std::vector<ECPoint> orbit_of_point(const EllipticCurve& e, const ECPoint& p) {
    std::vector<ECPoint> out;
    for (const auto& a : aut_O(e)) out.push_back(scale_point(e, p, a.omega));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EllipticCurve twist_curve(const EllipticCurve& e, unsigned k) {
    return {e.field, e.field->frobenius(e.a, k), e.field->frobenius(e.b, k)};
}

ECPoint twist_point(const EllipticCurve& e, const ECPoint& p, unsigned k) {
    if (!p.finite) return p;
    return ECPoint::affine(e.field->frobenius(p.x, k), e.field->frobenius(p.y, k));
}

EllipticCurve scale_curve(const EllipticCurve& e, Fq u) {
    const Field& f = *e.field;
    Fq u2 = f.mul(u, u), u4 = f.mul(u2, u2);
    return {e.field, f.mul(u4, e.a), f.mul(f.mul(u4, u2), e.b)};
}

ECPoint scale_point(const EllipticCurve& e, const ECPoint& p, Fq u) {
    if (!p.finite) return p;
    const Field& f = *e.field;
    Fq u2 = f.mul(u, u);
    return ECPoint::affine(f.mul(u2, p.x), f.mul(f.mul(u2, u), p.y));
}

std::optional<CurveIso> iso_with_point(const EllipticCurve& e, const ECPoint& p, const EllipticCurve& e2,
                                       const ECPoint& p2, unsigned k) {
    if (!p.finite || !p2.finite) throw Error(ErrorKind::PointAtInfinity, "points must be affine");
    const Field& f = *e.field;
    if (!(e.field->spec() == e2.field->spec())) return std::nullopt;
    EllipticCurve se = twist_curve(e, k);
    ECPoint sp = twist_point(e, p, k);
    for (std::uint32_t uc = 1; uc < f.q(); ++uc) {
        Fq u{uc};
        Fq u2 = f.mul(u, u), u3 = f.mul(u2, u), u4 = f.mul(u2, u2), u6 = f.mul(u4, u2);
        if (f.mul(u2, sp.x) == p2.x && f.mul(u3, sp.y) == p2.y && f.mul(u4, se.a) == e2.a &&
            f.mul(u6, se.b) == e2.b)
            return CurveIso{u, k};
    }
    return std::nullopt;
}

std::vector<unsigned> galois_group_EP(const EllipticCurve& e, const ECPoint& p) {
    std::vector<unsigned> out;
    for (unsigned k = 0; k < e.field->e(); ++k)
        if (iso_with_point(e, p, twist_curve(e, k), twist_point(e, p, k), 0)) out.push_back(k);
    return out;
}

Matrix translation_matrix(const EllipticCurve& e, const ECPoint& q) {
    if (!q.finite || !on_curve(e, q) || !smul(e, 3, q).is_identity())
        throw Error(ErrorKind::NotThreeTorsion, "expected a point of order 3");
    const FieldPtr& F = e.field;
    for (unsigned k = 1; k <= 3; ++k) {
        FieldEmbedding emb = embed_extension(F, k);
        const Field& K = *emb.big;
        EllipticCurve ek{emb.big, emb(e.a), emb(e.b)};
        ECPoint qk = ECPoint::affine(emb(q.x), emb(q.y));
        std::vector<ECPoint> pts;
        if (K.q() <= 4096) {
            pts = enumerate_points(ek);
        } else {
            Rng rng(k);
            pts.push_back(ECPoint::identity());
            while (pts.size() < 40) {
                Fq x = K.element(rng.below(K.q()));
                if (auto r = K.sqrt(K.add(K.mul(K.add(K.mul(x, x), ek.a), x), ek.b))) pts.push_back(ECPoint::affine(x, *r));
            }
        }
        std::vector<std::vector<Fq>> rows;
        for (const auto& r : pts) {
            Triple src = r.projective(K), dst = add(ek, r, qk).projective(K);
            // (g src) x dst = 0, unknowns g_ij at 3i+j
            for (int c = 0; c < 3; ++c) {
                int i1 = (c + 1) % 3, i2 = (c + 2) % 3;
                std::vector<Fq> row(9);
                for (int j = 0; j < 3; ++j) {
                    row[3 * i1 + j] = K.add(row[3 * i1 + j], K.mul(src[j], dst[i2]));
                    row[3 * i2 + j] = K.sub(row[3 * i2 + j], K.mul(src[j], dst[i1]));
                }
                rows.push_back(std::move(row));
            }
        }
        Matrix sys(emb.big, rows.size(), 9);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < 9; ++j) sys(i, j) = rows[i][j];
        auto ker = kernel_basis(sys);
        if (ker.size() != 1) continue;
        Matrix g(emb.big, 3, 3);
        for (int i = 0; i < 9; ++i) g(i / 3, i % 3) = ker[0][i];
        g = normalize_projective(g);
        Matrix out(F, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto d = emb.descend(g(i, j));
                if (!d) throw Error(ErrorKind::Internal, "translation matrix does not descend");
                out(i, j) = *d;
            }
        TernaryCubic f = weierstrass_cubic(F, e.a, e.b);
        auto c = proportionality(f.substitute(out), f);
        if (!c || !c->v) throw Error(ErrorKind::Internal, "translation matrix does not preserve the cubic");
        return out;
    }
    throw Error(ErrorKind::Internal, "translation matrix not determined by the sampled points");
}

}  // namespace egroups
