#include "egroups/pipeline.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "egroups/errors.hpp"

namespace egroups {

using boost::multiprecision::cpp_int;

ClassKey canonical_key(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) throw Error(ErrorKind::PointAtInfinity, "class keys need an affine point");
    const Field& f = *e.field;
    ClassKey best{~0u, ~0u, ~0u, ~0u};
    for (unsigned k = 0; k < f.e(); ++k) {
        EllipticCurve te = twist_curve(e, k);
        ECPoint tp = twist_point(e, p, k);
        for (std::uint32_t uc = 1; uc < f.q(); ++uc) {
            Fq u{uc};
            Fq u2 = f.mul(u, u), u3 = f.mul(u2, u), u4 = f.mul(u2, u2), u6 = f.mul(u4, u2);
            ClassKey key{f.mul(u4, te.a).v, f.mul(u6, te.b).v, f.mul(u2, tp.x).v, f.mul(u3, tp.y).v};
            best = std::min(best, key);
        }
    }
    return best;
}

const char* to_string(RecognitionStatus s) {
    switch (s) {
        case RecognitionStatus::Elliptic: return "Elliptic";
        case RecognitionStatus::NotClass2Shape: return "NotClass2Shape";
        case RecognitionStatus::CentroidNotField: return "CentroidNotField";
        case RecognitionStatus::WrongDims: return "WrongDims";
        case RecognitionStatus::PfaffianSingular: return "PfaffianSingular";
        case RecognitionStatus::NoRationalFlex: return "NoRationalFlex";
        case RecognitionStatus::NotDecomposable: return "NotDecomposable";
    }
    return "NotClass2Shape";
}

std::optional<PseudoIsometry> link_by_module(const LinearFormMatrix& j, const LinearFormMatrix& j2,
                                             const Matrix& omega) {
    AlgebraBasis mod = adjoint_module(j, substitute(j2, omega));
    for (const auto& el : mod.basis) {
        auto binv = inverse(el[1]);
        if (!binv || !inverse(el[0])) continue;
        auto oinv = inverse(omega);
        if (!oinv) return std::nullopt;
        return PseudoIsometry{block_diag({el[0], *binv}), oinv->transpose(), 0};
    }
    return std::nullopt;
}

RecoveredPoint recover_point(const LinearFormMatrix& n, const EllipticCurve& e) {
    for (const auto& p : enumerate_points(e)) {
        if (!p.finite) continue;
        AlgebraBasis mod = adjoint_module(j_matrix(e, p), n);
        for (const auto& el : mod.basis)
            if (inverse(el[0]) && inverse(el[1])) return {p, el[0], el[1]};
    }
    throw Error(ErrorKind::NoPointFound, "no point P with a nonzero adjoint module");
}

// ---------------------------------------------------------------------------

namespace {

Matrix upper_right(const Matrix& m) { return m.block(0, m.cols() / 2, m.rows() / 2, m.cols() / 2); }

}  // namespace

RecognitionReport recognize(const TensorHandle& t, std::uint64_t seed, std::size_t flex_index) {
    RecognitionReport rep;
    auto fail = [&](RecognitionStatus s, std::string why) {
        rep.status = s;
        rep.reason = std::move(why);
        return rep;
    };
    if (!t.field || t.field->e() != 1 || t.field->p() < 5)
        return fail(RecognitionStatus::NotClass2Shape, "expected a tensor over GF(p) with p >= 5");
    if (t.forms.empty() || !t.is_alternating())
        return fail(RecognitionStatus::NotClass2Shape, "structure matrices are not alternating");
    if (t.dim_v != 2 * t.dim_t() || t.dim_t() % 3 != 0)
        return fail(RecognitionStatus::WrongDims, "dimensions are not (6e, 3e)");

    FieldRewrite rw = centroid_field_rewrite(t, seed);
    if (rw.status == RewriteStatus::NotField) return fail(RecognitionStatus::CentroidNotField, rw.reason);
    if (rw.status == RewriteStatus::WrongShape) return fail(RecognitionStatus::WrongDims, rw.reason);
    rep.field = rw.field;
    rep.form = rw.form;
    const FieldPtr& F = rw.field;

    TernaryCubic pf = pfaffian6(rw.form);
    if (!is_smooth(pf)) return fail(RecognitionStatus::PfaffianSingular, "Pfaffian is not a smooth cubic");
    auto flexes = rational_flexes(pf);
    if (flexes.empty()) return fail(RecognitionStatus::NoRationalFlex, "Pfaffian has no rational flex");
    rep.flex_count = flexes.size();
    WeierstrassTransform w = weierstrass_normalize(pf, flexes.at(flex_index));
    if (w.singular) return fail(RecognitionStatus::PfaffianSingular, "Weierstrass model is singular");
    rep.weierstrass = w.z;
    EllipticCurve e = curve_make(F, w.a, w.b);

    LinearFormMatrix bw = substitute(rw.form, w.z);
    AlgebraBasis adj = adjoint(bw);
    StarTypeResult st = star_type(adj, seed);
    rep.star = st.type;
    auto dec = isotropic_decomposition(bw, st);
    if (!dec) return fail(RecognitionStatus::NotDecomposable, std::string("adjoint star type is ") + to_string(st.type));
    rep.decomposition = *dec;

    LinearFormMatrix split = congruence(bw, *dec, *dec);
    LinearFormMatrix n = LinearFormMatrix::zero(F, 3, 3);
    for (int k = 0; k < 3; ++k) n.slices[k] = upper_right(split.slices[k]);
    RecoveredPoint rp;
    try {
        rp = recover_point(n, e);
    } catch (const Error& err) {
        return fail(RecognitionStatus::NotDecomposable, err.what());
    }
    rep.curve = e;
    rep.point = rp.point;
    rep.key = canonical_key(e, rp.point);

    // b_matrix(E, P) -> form: (P diag(A, B^-1), Z^-T)
    rep.to_form.v = *dec * block_diag({rp.a, inverse_or_throw(rp.b)});
    rep.to_form.t = inverse_or_throw(w.z).transpose();
    if (!verify_pseudo_isometry(to_tensor(b_matrix(e, rp.point)), to_tensor(rw.form), rep.to_form.v, rep.to_form.t))
        throw Error(ErrorKind::Internal, "field-level recognition map does not verify");
    rep.to_input.v = rw.phi_v * flatten_matrix(rep.to_form.v);
    rep.to_input.t = rw.phi_t * flatten_matrix(rep.to_form.t);
    if (!verify_pseudo_isometry(flatten_to_prime(b_matrix(e, rp.point)), t, rep.to_input.v, rep.to_input.t))
        throw Error(ErrorKind::Internal, "recognition map does not verify on the input");
    rep.status = RecognitionStatus::Elliptic;
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<PseudoIsometry> psi_isom_generators(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) throw Error(ErrorKind::PointAtInfinity, "P must be affine");
    const FieldPtr& F = e.field;
    const Field& f = *F;
    Fq a = f.primitive();
    Matrix i3 = Matrix::identity(F, 3), a3 = Matrix::scalar(F, 3, a);
    LinearFormMatrix j = j_matrix(e, p);
    std::vector<PseudoIsometry> gens;
    gens.push_back({block_diag({a3, i3}), a3, 0});
    gens.push_back({block_diag({i3, a3}), a3, 0});

    if (!p.y.v) {
        // [[-1, 1], [-1, 0]] in GL_2(F) acting blockwise; with diag(a, 1) above it generates GL_2(F)
        Matrix g(F, 6, 6);
        g.set_block(0, 0, -i3);
        g.set_block(0, 3, i3);
        g.set_block(3, 0, -i3);
        gens.push_back({g, i3, 0});
    } else {
        Matrix x0 = Matrix::diagonal(F, {f.neg(f.one()), f.one(), f.one()});
        Matrix s(F, 6, 6);
        s.set_block(0, 3, x0);
        s.set_block(3, 0, x0);
        gens.push_back({s, Matrix::diagonal(F, {f.neg(f.one()), f.one(), f.neg(f.one())}), 0});
    }

    for (const auto& w : aut_O(e)) {
        if (w.omega == f.one() || !(scale_point(e, p, w.omega) == p)) continue;
        auto l = link_by_module(j, j, w.matrix);
        if (!l) throw Error(ErrorKind::Internal, "stabilizing automorphism does not lift");
        gens.push_back(*l);
    }
    for (const auto& q : torsion(e, 3)) {
        if (q.is_identity()) continue;
        Matrix tq = translation_matrix(e, q);
        auto l = link_by_module(j, j, tq);
        if (!l) l = link_by_module(j, j, inverse_or_throw(tq));
        if (!l) throw Error(ErrorKind::Internal, "translation by a 3-torsion point does not lift");
        gens.push_back(*l);
    }

    TensorHandle b = to_tensor(block_skew(j));
    for (const auto& g : gens)
        if (!verify_pseudo_isometry(b, b, g.v, g.t))
            throw Error(ErrorKind::Internal, "pseudo-isometry generator does not verify");
    return gens;
}

namespace {

cpp_int gl2_order(std::uint64_t q) {
    cpp_int qq = q;
    return (qq * qq - 1) * (qq * qq - qq);
}

OrderFactors psi_factors(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) throw Error(ErrorKind::PointAtInfinity, "P must be affine");
    OrderFactors o;
    o.q = e.field->q();
    o.torsion3 = torsion(e, 3).size();
    o.aut_ratio = aut_O(e).size() / orbit_of_point(e, p).size();
    cpp_int tail;
    if (!p.y.v) {
        o.tail = "GL2";
        tail = gl2_order(o.q);
    } else {
        o.tail = "2(q-1)^2";
        tail = 2 * cpp_int(o.q - 1) * cpp_int(o.q - 1);
    }
    o.tail_value = tail.str();
    o.value = (cpp_int(o.aut_ratio) * o.torsion3 * tail).str();
    return o;
}

}  // namespace

OrderFactors psi_isom_order(const EllipticCurve& e, const ECPoint& p) { return psi_factors(e, p); }

OrderFactors aut_order(const EllipticCurve& e, const ECPoint& p) {
    OrderFactors o = psi_factors(e, p);
    o.q_power = 18;
    o.galois = galois_group_EP(e, p).size();
    cpp_int v = cpp_int(o.value) * o.galois;
    for (int i = 0; i < 18; ++i) v *= o.q;
    o.value = v.str();
    return o;
}

// ---------------------------------------------------------------------------

namespace {

PseudoIsometry compose(const PseudoIsometry& second, const PseudoIsometry& first) {
    return {second.v * first.v, second.t * first.t, (first.sigma_power + second.sigma_power)};
}

PseudoIsometry invert(const PseudoIsometry& x) { return {inverse_or_throw(x.v), inverse_or_throw(x.t), 0}; }

}  // namespace

IsoCoset iso_coset(const TensorHandle& t1, const RecognitionReport& r1, const TensorHandle& t2,
                   const RecognitionReport& r2) {
    IsoCoset out;
    out.first = r1;
    out.second = r2;
    if (r1.status != RecognitionStatus::Elliptic || r2.status != RecognitionStatus::Elliptic) {
        out.reason = "not elliptic";
        return out;
    }
    if (!(r1.field->spec() == r2.field->spec())) {
        out.reason = "centroid mismatch";
        return out;
    }
    const FieldPtr& F = r1.field;
    const EllipticCurve& e1 = *r1.curve;
    EllipticCurve e2{F, r2.curve->a, r2.curve->b};
    ECPoint p1 = r1.point, p2 = r2.point;

    PseudoIsometry from1 = invert(r1.to_input);

    for (unsigned k = 0; k < F->e(); ++k) {
        auto iso = iso_with_point(e1, p1, e2, p2, k);
        if (!iso) continue;
        const Field& f = *F;
        Fq u2 = f.mul(iso->u, iso->u);
        Matrix omega = Matrix::diagonal(F, {u2, f.mul(u2, iso->u), f.one()});
        LinearFormMatrix jt = j_matrix(twist_curve(e1, k), twist_point(e1, p1, k));
        LinearFormMatrix j2 = j_matrix(e2, p2);
        auto link = link_by_module(jt, j2, omega);
        if (!link) link = link_by_module(jt, j2, inverse_or_throw(omega));
        if (!link) throw Error(ErrorKind::Internal, "scaling isomorphism does not lift");
        PseudoIsometry galois{flatten_frobenius(F, 6, k), flatten_frobenius(F, 3, k), k};
        PseudoIsometry flat_link{flatten_matrix(link->v), flatten_matrix(link->t), 0};
        PseudoIsometry w = compose(r2.to_input, compose(flat_link, compose(galois, from1)));
        w.sigma_power = k;
        if (!verify_pseudo_isometry(t1, t2, w.v, w.t)) throw Error(ErrorKind::Internal, "witness does not verify");
        out.witness = w;
        out.isomorphic = true;
        for (const auto& g : psi_isom_generators(e1, p1)) {
            PseudoIsometry flat{flatten_matrix(g.v), flatten_matrix(g.t), 0};
            PseudoIsometry moved = compose(r1.to_input, compose(flat, from1));
            if (!verify_pseudo_isometry(t1, t1, moved.v, moved.t))
                throw Error(ErrorKind::Internal, "transported generator does not verify");
            out.generators.push_back(moved);
        }
        out.galois = galois_group_EP(e1, p1);
        return out;
    }
    out.reason = "no Frobenius twist and scaling relates the curves with points";
    return out;
}

IsoCoset iso_coset(const TensorHandle& t1, const TensorHandle& t2, std::uint64_t seed) {
    return iso_coset(t1, recognize(t1, seed), t2, recognize(t2, seed));
}

}  // namespace egroups
