#include "egroups/forms.hpp"

#include <algorithm>

#include "egroups/errors.hpp"

namespace egroups {

LinearFormMatrix LinearFormMatrix::zero(FieldPtr field, std::size_t rows, std::size_t cols) {
    Matrix z(field, rows, cols);
    return {std::move(field), {z, z, z}};
}

bool LinearFormMatrix::is_skew() const {
    if (rows() != cols()) return false;
    for (const auto& s : slices)
        if (!(s.transpose() == -s)) return false;
    return true;
}

LinearFormMatrix LinearFormMatrix::transpose() const {
    return {field, {slices[0].transpose(), slices[1].transpose(), slices[2].transpose()}};
}

Matrix eval_linear_matrix(const LinearFormMatrix& m, const Triple& y) {
    return m.slices[0].scaled(y[0]) + m.slices[1].scaled(y[1]) + m.slices[2].scaled(y[2]);
}

LinearFormMatrix substitute(const LinearFormMatrix& m, const Matrix& z) {
    if (z.rows() != 3 || z.cols() != 3) throw Error(ErrorKind::DimensionMismatch, "substitution matrix must be 3x3");
    LinearFormMatrix out = LinearFormMatrix::zero(m.field, m.rows(), m.cols());
    // sum_k S_k (Z y)_k = sum_j (sum_k Z_kj S_k) y_j
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            if (z(k, j).v) out.slices[j] = out.slices[j] + m.slices[k].scaled(z(k, j));
    return out;
}

LinearFormMatrix congruence(const LinearFormMatrix& m, const Matrix& x, const Matrix& y, bool require_invertible) {
    if (require_invertible && (!x.square() || !y.square() || !det(x).v || !det(y).v))
        throw Error(ErrorKind::SingularTransform, "congruence by a singular matrix");
    Matrix xt = x.transpose();
    return {m.field, {xt * m.slices[0] * y, xt * m.slices[1] * y, xt * m.slices[2] * y}};
}

LinearFormMatrix galois_twist(const LinearFormMatrix& m, unsigned k) {
    return {m.field, {m.slices[0].frobenius(k), m.slices[1].frobenius(k), m.slices[2].frobenius(k)}};
}

// ---------------------------------------------------------------------------

TernaryForm::TernaryForm(FieldPtr field, unsigned degree)
    : field_(std::move(field)), degree_(degree), c_(monomial_count(degree)) {}

TernaryForm::TernaryForm(FieldPtr field, unsigned degree, std::vector<Fq> coeffs)
    : field_(std::move(field)), degree_(degree), c_(std::move(coeffs)) {
    if (c_.size() != monomial_count(degree)) throw Error(ErrorKind::DimensionMismatch, "coefficient count");
}

std::size_t TernaryForm::index(unsigned d, unsigned i, unsigned j, unsigned k) {
    (void)k;
    return (d - i) * (d - i + 1) / 2 + (d - i - j);
}

std::array<unsigned, 3> TernaryForm::exponents(unsigned d, std::size_t idx) {
    unsigned i = d;
    std::size_t base = 0;
    while (idx >= base + (d - i + 1)) {
        base += d - i + 1;
        --i;
    }
    unsigned j = static_cast<unsigned>((d - i) - (idx - base));
    return {i, j, d - i - j};
}

TernaryForm TernaryForm::linear(FieldPtr field, const Triple& c) {
    return TernaryForm(std::move(field), 1, {c[0], c[1], c[2]});
}

TernaryForm TernaryForm::constant(FieldPtr field, Fq c) { return TernaryForm(std::move(field), 0, {c}); }

bool TernaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Fq x) { return x.v == 0; });
}

Fq TernaryForm::eval(const Triple& y) const {
    const Field& f = *field_;
    std::vector<std::array<Fq, 4>> pw(3);
    for (int v = 0; v < 3; ++v) {
        pw[v][0] = f.one();
        for (int e = 1; e < 4; ++e) pw[v][e] = f.mul(pw[v][e - 1], y[v]);
    }
    Fq acc{};
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        if (!c_[idx].v) continue;
        auto [i, j, k] = exponents(degree_, idx);
        Fq term = c_[idx];
        for (auto [v, e] : {std::pair{0u, i}, std::pair{1u, j}, std::pair{2u, k}}) {
            if (e < 4)
                term = f.mul(term, pw[v][e]);
            else
                term = f.mul(term, f.pow(y[v], e));
        }
        acc = f.add(acc, term);
    }
    return acc;
}

TernaryForm TernaryForm::partial(unsigned var) const {
    if (degree_ == 0) return TernaryForm(field_, 0);
    TernaryForm out(field_, degree_ - 1);
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        if (!c_[idx].v) continue;
        auto e = exponents(degree_, idx);
        if (e[var] == 0) continue;
        Fq c = field_->mul(c_[idx], field_->from_int(e[var]));
        --e[var];
        std::size_t t = index(degree_ - 1, e[0], e[1], e[2]);
        out.c_[t] = field_->add(out.c_[t], c);
    }
    return out;
}

TernaryForm TernaryForm::substitute(const Matrix& z) const {
    std::array<TernaryForm, 3> lin;
    for (int v = 0; v < 3; ++v) lin[v] = linear(field_, {z(v, 0), z(v, 1), z(v, 2)});
    std::array<std::vector<TernaryForm>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].push_back(constant(field_, field_->one()));
        for (unsigned e = 1; e <= degree_; ++e) pw[v].push_back(pw[v].back() * lin[v]);
    }
    TernaryForm out(field_, degree_);
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        if (!c_[idx].v) continue;
        auto [i, j, k] = exponents(degree_, idx);
        out = out + (pw[0][i] * pw[1][j] * pw[2][k]).scaled(c_[idx]);
    }
    return out;
}

TernaryForm TernaryForm::scaled(Fq c) const {
    TernaryForm out = *this;
    for (auto& x : out.c_) x = field_->mul(x, c);
    return out;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (a.degree_ != b.degree_) throw Error(ErrorKind::DimensionMismatch, "degree mismatch in sum");
    TernaryForm out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.field_->add(a.c_[i], b.c_[i]);
    return out;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + b.scaled(b.field_->neg(b.field_->one())); }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    const Field& f = *a.field_;
    TernaryForm out(a.field_, a.degree_ + b.degree_);
    for (std::size_t x = 0; x < a.c_.size(); ++x) {
        if (!a.c_[x].v) continue;
        auto ea = TernaryForm::exponents(a.degree_, x);
        for (std::size_t y = 0; y < b.c_.size(); ++y) {
            if (!b.c_[y].v) continue;
            auto eb = TernaryForm::exponents(b.degree_, y);
            std::size_t t = TernaryForm::index(out.degree_, ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
            out.c_[t] = f.add(out.c_[t], f.mul(a.c_[x], b.c_[y]));
        }
    }
    return out;
}

TernaryCubic weierstrass_cubic(const FieldPtr& field, Fq a, Fq b) {
    TernaryCubic f(field, 3);
    f.set(3, 0, 0, field->one());
    f.set(1, 0, 2, a);
    f.set(0, 0, 3, b);
    f.set(0, 2, 1, field->neg(field->one()));
    return f;
}

std::optional<Fq> proportionality(const TernaryForm& f, const TernaryForm& g) {
    if (f.degree() != g.degree()) return std::nullopt;
    const Field& F = *g.field();
    std::optional<Fq> c;
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        Fq x = f.coeffs()[i], y = g.coeffs()[i];
        if (!y.v) {
            if (x.v) return std::nullopt;
            continue;
        }
        Fq r = F.div(x, y);
        if (c && *c != r) return std::nullopt;
        c = r;
    }
    if (!c) return f.is_zero() ? std::optional<Fq>(F.zero()) : std::nullopt;
    return c;
}

ProjPoint normalize_point(const Field& field, const Triple& x) {
    for (int i = 0; i < 3; ++i)
        if (x[i].v) {
            Fq inv = field.inv(x[i]);
            return {{field.mul(x[0], inv), field.mul(x[1], inv), field.mul(x[2], inv)}};
        }
    throw Error(ErrorKind::BadInput, "zero vector is not a projective point");
}

// ---------------------------------------------------------------------------

namespace {

using FormGrid = std::vector<std::vector<TernaryForm>>;

FormGrid entries(const LinearFormMatrix& m) {
    FormGrid g(m.rows(), std::vector<TernaryForm>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g[i][j] = TernaryForm::linear(m.field, {m.slices[0](i, j), m.slices[1](i, j), m.slices[2](i, j)});
    return g;
}

TernaryForm pfaffian_rec(const FormGrid& a, std::vector<std::size_t> idx, const FieldPtr& F) {
    if (idx.empty()) return TernaryForm::constant(F, F->one());
    std::size_t first = idx[0];
    TernaryForm acc;
    bool have = false;
    for (std::size_t t = 1; t < idx.size(); ++t) {
        std::vector<std::size_t> rest;
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        TernaryForm term = a[first][idx[t]] * pfaffian_rec(a, rest, F);
        if (t % 2 == 0) term = term.scaled(F->neg(F->one()));
        acc = have ? acc + term : term;
        have = true;
    }
    return acc;
}

TernaryForm det3_grid(const FormGrid& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TernaryCubic pfaffian6(const LinearFormMatrix& b) {
    if (b.rows() != 6 || !b.is_skew()) throw Error(ErrorKind::NotSkew, "expected a 6x6 skew-symmetric matrix");
    return pfaffian_rec(entries(b), {0, 1, 2, 3, 4, 5}, b.field);
}

TernaryCubic det3(const LinearFormMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a 3x3 matrix");
    return det3_grid(entries(m));
}

TernaryCubic hessian_cubic(const TernaryCubic& f) {
    FormGrid h(3, std::vector<TernaryForm>(3));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) h[i][j] = f.partial(i).partial(j);
    return det3_grid(h);
}

bool is_smooth(const TernaryCubic& f) {
    if (f.degree() != 3) throw Error(ErrorKind::BadInput, "expected a cubic");
    TernaryCubic h = hessian_cubic(f);
    Matrix m(f.field(), 6, 6);
    for (unsigned v = 0; v < 3; ++v) {
        auto df = f.partial(v).coeffs();
        auto dh = h.partial(v).coeffs();
        for (std::size_t c = 0; c < 6; ++c) {
            m(v, c) = df[c];
            m(3 + v, c) = dh[c];
        }
    }
    return det(m).v != 0;
}

std::vector<SingularPoint> singular_points(const TernaryCubic& f, unsigned max_ext) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero cubic");
    std::vector<SingularPoint> out;
    const FieldPtr& F = f.field();
    for (unsigned k = 1; k <= max_ext; ++k) {
        std::uint64_t Q = 1;
        for (unsigned i = 0; i < k; ++i) Q *= F->q();
        if (Q * Q > 20'000'000ULL) throw Error(ErrorKind::TooLarge, "singular point scan too large");
        FieldEmbedding emb = embed_extension(F, k);
        const Field& K = *emb.big;
        std::vector<Fq> c;
        for (Fq x : f.coeffs()) c.push_back(emb(x));
        TernaryCubic g(emb.big, 3, c);
        std::array<TernaryForm, 3> d{g.partial(0), g.partial(1), g.partial(2)};
        auto defined_below = [&](const ProjPoint& pt) {
            for (unsigned j = 1; j < k; ++j) {
                if (k % j) continue;
                bool in = true;
                for (Fq x : pt.x) in = in && K.frobenius(x, F->e() * j) == x;
                if (in) return true;
            }
            return false;
        };
        auto test = [&](const Triple& y) {
            if (d[0].eval(y).v || d[1].eval(y).v || d[2].eval(y).v) return;
            // Euler's relation gives f = 0 from the partials since 3 is invertible
            ProjPoint pt{y};
            if (!defined_below(pt)) out.push_back({k, emb.big, pt});
        };
        const std::uint32_t q = K.q();
        test({K.one(), K.zero(), K.zero()});
        for (std::uint32_t x = 0; x < q; ++x) test({Fq{x}, K.one(), K.zero()});
        for (std::uint32_t x = 0; x < q; ++x)
            for (std::uint32_t y = 0; y < q; ++y) test({Fq{x}, Fq{y}, K.one()});
    }
    for (auto& s : out) s.point = normalize_point(*s.field, s.point.x);
    return out;
}

std::vector<ProjPoint> rational_points(const TernaryCubic& f) {
    const FieldPtr& F = f.field();
    const Field& K = *F;
    std::vector<ProjPoint> pts;
    auto add = [&](const Triple& y) { pts.push_back(normalize_point(K, y)); };
    // z = 1: for each x, a cubic in y
    for (std::uint32_t xc = 0; xc < K.q(); ++xc) {
        Fq x{xc};
        Vec c(4);
        for (std::size_t idx = 0; idx < 10; ++idx) {
            Fq co = f.coeffs()[idx];
            if (!co.v) continue;
            auto [i, j, k] = TernaryForm::exponents(3, idx);
            (void)k;
            c[j] = K.add(c[j], K.mul(co, K.pow(x, i)));
        }
        UniPoly g(F, c);
        if (g.is_zero()) {
            for (std::uint32_t y = 0; y < K.q(); ++y) add({x, Fq{y}, K.one()});
        } else {
            for (Fq y : roots(g)) add({x, y, K.one()});
        }
    }
    // z = 0, y = 1: f(x, 1, 0) as a cubic in x
    {
        Vec c(4);
        for (unsigned i = 0; i <= 3; ++i) c[i] = f.coeff(i, 3 - i, 0);
        UniPoly g(F, c);
        if (g.is_zero()) {
            for (std::uint32_t x = 0; x < K.q(); ++x) add({Fq{x}, K.one(), K.zero()});
        } else {
            for (Fq x : roots(g)) add({x, K.one(), K.zero()});
        }
    }
    if (!f.coeff(3, 0, 0).v) add({K.one(), K.zero(), K.zero()});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<ProjPoint> rational_flexes(const TernaryCubic& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero cubic");
    TernaryCubic h = hessian_cubic(f);
    std::array<TernaryForm, 3> d{f.partial(0), f.partial(1), f.partial(2)};
    std::vector<ProjPoint> out;
    for (const auto& pt : rational_points(f)) {
        if (h.eval(pt.x).v) continue;
        if (!d[0].eval(pt.x).v && !d[1].eval(pt.x).v && !d[2].eval(pt.x).v) continue;
        out.push_back(pt);
    }
    return out;
}

WeierstrassTransform weierstrass_normalize(const TernaryCubic& f, const ProjPoint& flex) {
    const FieldPtr& F = f.field();
    const Field& K = *F;
    if (f.eval(flex.x).v) throw Error(ErrorKind::NotAFlex, "point is not on the cubic");
    Triple grad{f.partial(0).eval(flex.x), f.partial(1).eval(flex.x), f.partial(2).eval(flex.x)};
    if (!grad[0].v && !grad[1].v && !grad[2].v) throw Error(ErrorKind::NotAFlex, "point is singular");
    if (hessian_cubic(f).eval(flex.x).v) throw Error(ErrorKind::NotAFlex, "Hessian does not vanish");

    // Z1: columns (w, flex, e_i) with w spanning the tangent line together with the flex.
    std::size_t li = 0;
    while (!grad[li].v) ++li;
    Matrix tangent(F, 1, 3);
    for (int i = 0; i < 3; ++i) tangent(0, i) = grad[i];
    Vec w;
    for (const auto& v : kernel_basis(tangent)) {
        Matrix pair = Matrix::from_columns(F, 3, {v, Vec(flex.x.begin(), flex.x.end())});
        if (rank(pair) == 2) {
            w = v;
            break;
        }
    }
    Vec ei(3);
    ei[li] = K.one();
    Matrix z = Matrix::from_columns(F, 3, {w, Vec(flex.x.begin(), flex.x.end()), ei});
    TernaryCubic g = f.substitute(z);

    Fq c = g.coeff(3, 0, 0);
    Fq alpha = g.coeff(0, 2, 1);
    if (!c.v || !alpha.v) throw Error(ErrorKind::NotAFlex, "tangent line meets the cubic in a line");
    // complete the square in y2
    Fq two_alpha = K.add(alpha, alpha);
    Matrix z2 = Matrix::identity(F, 3);
    z2(1, 0) = K.neg(K.div(g.coeff(1, 1, 1), two_alpha));
    z2(1, 2) = K.neg(K.div(g.coeff(0, 1, 2), two_alpha));
    g = g.substitute(z2);
    z = z * z2;
    // complete the cube in y1
    Matrix z3 = Matrix::identity(F, 3);
    z3(0, 2) = K.neg(K.div(g.coeff(2, 0, 1), K.mul(K.from_int(3), c)));
    g = g.substitute(z3);
    z = z * z3;
    // scale y3 so the y2^2 y3 coefficient is -c
    Fq r = K.neg(K.div(c, alpha));
    Matrix z4 = Matrix::identity(F, 3);
    z4(2, 2) = r;
    g = g.substitute(z4);
    z = z * z4;

    WeierstrassTransform out{z, c, K.div(g.coeff(1, 0, 2), c), K.div(g.coeff(0, 0, 3), c), false};
    if (!(g == weierstrass_cubic(F, out.a, out.b).scaled(c)))
        throw Error(ErrorKind::Internal, "Weierstrass normalization identity failed");
    Fq disc = K.add(K.mul(K.from_int(4), K.pow(out.a, 3)), K.mul(K.from_int(27), K.mul(out.b, out.b)));
    out.singular = disc.v == 0;
    return out;
}

}  // namespace egroups
