#include "egroups/egroup.hpp"

#include "egroups/errors.hpp"

namespace egroups {

LinearFormMatrix j_matrix(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) throw Error(ErrorKind::PointAtInfinity, "J needs an affine point");
    const FieldPtr& F = e.field;
    const Field& f = *F;
    Fq l = p.x, m = p.y;
    LinearFormMatrix j = LinearFormMatrix::zero(F, 3, 3);
    auto& sx = j.slices[0];
    auto& sy = j.slices[1];
    auto& sz = j.slices[2];
    sx(0, 0) = f.one();
    sx(1, 1) = l;
    sx(1, 2) = f.one();
    sx(2, 1) = f.one();
    sy(0, 1) = f.one();
    sy(1, 0) = f.one();
    sz(0, 0) = f.neg(l);
    sz(0, 1) = f.neg(m);
    sz(1, 0) = m;
    sz(1, 1) = f.add(e.a, f.mul(l, l));
    sz(2, 2) = f.neg(f.one());
    return j;
}

LinearFormMatrix hessian_matrix_rep(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite || p.y.v) throw Error(ErrorKind::NotTwoTorsion, "expected an affine point with y = 0");
    if (!on_curve(e, p)) throw Error(ErrorKind::PointNotOnCurve, "point not on curve");
    const Field& f = *e.field;
    Fq l = p.x, a = e.a, b = e.b;
    Fq three = f.from_int(3);
    LinearFormMatrix h = LinearFormMatrix::zero(e.field, 3, 3);
    auto& sx = h.slices[0];
    auto& sy = h.slices[1];
    auto& sz = h.slices[2];
    // (0,0): 3l x + a z
    sx(0, 0) = f.mul(three, l);
    sz(0, 0) = a;
    // (0,1), (1,0): y
    sy(0, 1) = sy(1, 0) = f.one();
    // (0,2), (2,0): a x + (a l + 3b) z
    sx(0, 2) = sx(2, 0) = a;
    sz(0, 2) = sz(2, 0) = f.add(f.mul(a, l), f.mul(three, b));
    // (1,1): x - l z
    sx(1, 1) = f.one();
    sz(1, 1) = f.neg(l);
    // (1,2), (2,1): -l y
    sy(1, 2) = sy(2, 1) = f.neg(l);
    // (2,2): (a l + 3b) x + (3 l b - a^2) z
    sx(2, 2) = f.add(f.mul(a, l), f.mul(three, b));
    sz(2, 2) = f.sub(f.mul(three, f.mul(l, b)), f.mul(a, a));
    return h;
}

LinearFormMatrix block_skew(const LinearFormMatrix& j) {
    std::size_t n = j.rows();
    LinearFormMatrix b = LinearFormMatrix::zero(j.field, 2 * n, 2 * n);
    for (int k = 0; k < 3; ++k) {
        b.slices[k].set_block(0, n, j.slices[k]);
        b.slices[k].set_block(n, 0, -j.slices[k].transpose());
    }
    return b;
}

LinearFormMatrix b_matrix(const EllipticCurve& e, const ECPoint& p) { return block_skew(j_matrix(e, p)); }

EGroupSpec egroup_make(const EllipticCurve& e, const ECPoint& p) {
    if (!p.finite) throw Error(ErrorKind::PointAtInfinity, "P must differ from the identity");
    if (!on_curve(e, p)) throw Error(ErrorKind::PointNotOnCurve, "point not on curve");
    return {e, p, b_matrix(e, p)};
}

// ---------------------------------------------------------------------------

BaerGroup::BaerGroup(TensorHandle t) : t_(std::move(t)) {
    if (!t_.is_alternating()) throw Error(ErrorKind::NotSkew, "Baer group needs an alternating tensor");
    if (t_.field->p() == 2) throw Error(ErrorKind::BadCharacteristic, "Baer group needs odd characteristic");
}

GroupElement BaerGroup::identity() const { return {Vec(t_.dim_v), Vec(t_.dim_t())}; }

GroupElement BaerGroup::mul(const GroupElement& g, const GroupElement& h) const {
    const Field& f = *t_.field;
    GroupElement out{Vec(t_.dim_v), t_.eval(g.v, h.v)};
    for (std::size_t i = 0; i < t_.dim_v; ++i) out.v[i] = f.add(g.v[i], h.v[i]);
    for (std::size_t k = 0; k < t_.dim_t(); ++k)
        out.w[k] = f.add(f.add(g.w[k], h.w[k]), f.mul(f.half(), out.w[k]));
    return out;
}

GroupElement BaerGroup::inv(const GroupElement& g) const {
    const Field& f = *t_.field;
    GroupElement out = g;
    for (auto& x : out.v) x = f.neg(x);
    for (auto& x : out.w) x = f.neg(x);
    return out;
}

GroupElement BaerGroup::comm(const GroupElement& g, const GroupElement& h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
}

GroupElement BaerGroup::pow(const GroupElement& g, std::uint64_t n) const {
    GroupElement acc = identity(), base = g;
    while (n) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

GroupElement BaerGroup::random(Rng& rng) const {
    GroupElement g = identity();
    for (auto& x : g.v) x = t_.field->element(rng.below(t_.field->q()));
    for (auto& x : g.w) x = t_.field->element(rng.below(t_.field->q()));
    return g;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Fq> alpha_powers(const Field& f, unsigned count) {
    std::vector<Fq> out;
    Fq x = f.one();
    for (unsigned i = 0; i < count; ++i, x = f.mul(x, f.alpha())) out.push_back(x);
    return out;
}

}  // namespace

TensorHandle flatten_to_prime(const LinearFormMatrix& b) {
    if (b.rows() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "flattening needs square forms");
    const Field& f = *b.field;
    unsigned e = f.e();
    std::size_t n = b.rows();
    FieldPtr P = field_make(f.p(), 1);
    auto ap = alpha_powers(f, 2 * e);
    TensorHandle t{P, n * e, std::vector<Matrix>(3 * e, Matrix(P, n * e, n * e))};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Fq bij = b.slices[k](i, j);
                if (!bij.v) continue;
                for (unsigned a = 0; a < e; ++a)
                    for (unsigned bb = 0; bb < e; ++bb) {
                        auto c = f.coeffs(f.mul(ap[a + bb], bij));
                        for (unsigned cc = 0; cc < e; ++cc) t.forms[k * e + cc](i * e + a, j * e + bb) = Fq{c[cc]};
                    }
            }
    return t;
}

Matrix flatten_matrix(const Matrix& x) {
    const Field& f = *x.field();
    unsigned e = f.e();
    FieldPtr P = field_make(f.p(), 1);
    auto ap = alpha_powers(f, e);
    Matrix out(P, x.rows() * e, x.cols() * e);
    for (std::size_t j = 0; j < x.rows(); ++j)
        for (std::size_t i = 0; i < x.cols(); ++i) {
            if (!x(j, i).v) continue;
            for (unsigned a = 0; a < e; ++a) {
                auto c = f.coeffs(f.mul(x(j, i), ap[a]));
                for (unsigned b = 0; b < e; ++b) out(j * e + b, i * e + a) = Fq{c[b]};
            }
        }
    return out;
}

Matrix flatten_frobenius(const FieldPtr& field, std::size_t n, unsigned k) {
    const Field& f = *field;
    unsigned e = f.e();
    FieldPtr P = field_make(f.p(), 1);
    auto ap = alpha_powers(f, e);
    Matrix fr(P, e, e);
    for (unsigned a = 0; a < e; ++a) {
        auto c = f.coeffs(f.frobenius(ap[a], k));
        for (unsigned b = 0; b < e; ++b) fr(b, a) = Fq{c[b]};
    }
    return kron_identity(n, fr);
}

Scrambled scramble_with_transform(const TensorHandle& t, std::uint64_t seed) {
    Rng rng(seed);
    Matrix x = random_invertible(t.field, t.dim_v, rng);
    Matrix z = random_invertible(t.field, t.dim_t(), rng);
    Scrambled out{{t.field, t.dim_v, {}}, x, z};
    Matrix xt = x.transpose();
    for (std::size_t j = 0; j < t.dim_t(); ++j) {
        Matrix s(t.field, t.dim_v, t.dim_v);
        for (std::size_t k = 0; k < t.dim_t(); ++k)
            if (z(k, j).v) s = s + t.forms[k].scaled(z(k, j));
        out.tensor.forms.push_back(xt * s * x);
    }
    return out;
}

TensorHandle scramble(const TensorHandle& t, std::uint64_t seed) { return scramble_with_transform(t, seed).tensor; }

}  // namespace egroups
