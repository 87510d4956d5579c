#include "egroups/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "egroups/errors.hpp"

namespace egroups {

bool TensorHandle::is_alternating() const {
    for (const auto& c : forms) {
        if (c.rows() != dim_v || c.cols() != dim_v) return false;
        for (std::size_t i = 0; i < dim_v; ++i) {
            if (c(i, i).v) return false;
            for (std::size_t j = i + 1; j < dim_v; ++j)
                if (c(i, j) != field->neg(c(j, i))) return false;
        }
    }
    return true;
}

Vec TensorHandle::eval(const Vec& u, const Vec& w) const {
    Vec out(forms.size());
    for (std::size_t k = 0; k < forms.size(); ++k) {
        Vec cw = forms[k].apply(w);
        Fq s{};
        for (std::size_t i = 0; i < u.size(); ++i) s = field->add(s, field->mul(u[i], cw[i]));
        out[k] = s;
    }
    return out;
}

TensorHandle to_tensor(const LinearFormMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "tensor needs square slices");
    return {m.field, m.rows(), {m.slices.begin(), m.slices.end()}};
}

// ---------------------------------------------------------------------------
// algebra elements

AlgElem alg_add(const AlgElem& a, const AlgElem& b) {
    AlgElem out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

AlgElem alg_sub(const AlgElem& a, const AlgElem& b) {
    AlgElem out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

AlgElem alg_scale(const AlgElem& a, Fq c) {
    AlgElem out;
    for (const auto& m : a) out.push_back(m.scaled(c));
    return out;
}

bool alg_is_zero(const AlgElem& a) {
    return std::all_of(a.begin(), a.end(), [](const Matrix& m) { return m.is_zero(); });
}

namespace {

std::vector<std::size_t> part_sizes(const AlgebraBasis& a) {
    std::vector<std::size_t> s;
    for (const auto& m : a.basis.at(0)) s.push_back(m.rows());
    return s;
}

}  // namespace

AlgElem AlgebraBasis::identity() const {
    AlgElem out;
    for (auto n : part_sizes(*this)) out.push_back(Matrix::identity(field, n));
    return out;
}

AlgElem AlgebraBasis::zero() const {
    AlgElem out;
    for (auto n : part_sizes(*this)) out.push_back(Matrix(field, n, n));
    return out;
}

AlgElem AlgebraBasis::mul(const AlgElem& a, const AlgElem& b) const {
    switch (kind) {
        case AlgebraKind::Centroid: return {a[0] * b[0], a[1] * b[1], a[2] * b[2]};
        case AlgebraKind::Adjoint: return {a[0] * b[0], b[1] * a[1]};
        case AlgebraKind::Module: break;
    }
    throw Error(ErrorKind::BadInput, "adjoint modules have no product");
}

AlgElem AlgebraBasis::star(const AlgElem& a) const {
    if (kind == AlgebraKind::Centroid) return {a[1], a[0], a[2]};
    return {a[1], a[0]};
}

AlgElem AlgebraBasis::combine(const Vec& coeffs) const {
    AlgElem out = zero();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i].v) out = alg_add(out, alg_scale(basis[i], coeffs[i]));
    return out;
}

AlgElem AlgebraBasis::random_element(Rng& rng) const {
    Vec c(basis.size());
    for (auto& x : c) x = field->element(rng.below(field->q()));
    return combine(c);
}

namespace {

Vec flatten_elem(const AlgElem& a) {
    Vec out;
    for (const auto& m : a) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

}  // namespace

std::optional<Vec> AlgebraBasis::coordinates(const AlgElem& a) const {
    Vec target = flatten_elem(a);
    if (basis.empty()) {
        if (std::all_of(target.begin(), target.end(), [](Fq x) { return x.v == 0; })) return Vec{};
        return std::nullopt;
    }
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(flatten_elem(b));
    return solve(Matrix::from_columns(field, target.size(), cols), target);
}

Matrix AlgebraBasis::regular(const AlgElem& a) const {
    if (kind == AlgebraKind::Adjoint) return block_diag({a[0], a[1].transpose()});
    return block_diag(a);
}

bool AlgebraBasis::is_closed() const {
    for (const auto& x : basis) {
        if (!coordinates(star(x))) return false;
        if (kind == AlgebraKind::Module) continue;
        for (const auto& y : basis)
            if (!coordinates(mul(x, y))) return false;
    }
    return true;
}

bool AlgebraBasis::is_commutative() const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto d = alg_sub(mul(basis[i], basis[j]), mul(basis[j], basis[i]));
            if (!alg_is_zero(d)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// centroid

namespace {

AlgebraBasis centroid_full(const TensorHandle& t) {
    const Field& f = *t.field;
    std::size_t n = t.dim_v, d = t.dim_t(), nn = n * n;
    Matrix sys(t.field, 2 * d * nn, 2 * nn + d * d);
    std::size_t row = 0;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, row += 2) {
                for (std::size_t a = 0; a < n; ++a) {
                    sys(row, a * n + i) = t.forms[k](a, j);
                    sys(row + 1, nn + a * n + j) = t.forms[k](i, a);
                }
                for (std::size_t l = 0; l < d; ++l) {
                    Fq c = f.neg(t.forms[l](i, j));
                    sys(row, 2 * nn + k * d + l) = c;
                    sys(row + 1, 2 * nn + k * d + l) = c;
                }
            }
    AlgebraBasis out{t.field, AlgebraKind::Centroid, {}};
    for (const auto& v : kernel_basis(sys)) {
        Matrix al(t.field, n, n), be(t.field, n, n), ga(t.field, d, d);
        for (std::size_t i = 0; i < nn; ++i) {
            al(i / n, i % n) = v[i];
            be(i / n, i % n) = v[nn + i];
        }
        for (std::size_t i = 0; i < d * d; ++i) ga(i / d, i % d) = v[2 * nn + i];
        out.basis.push_back({al, be, ga});
    }
    return out;
}

}  // namespace

AlgebraBasis centroid(const TensorHandle& t) {
    const Field& f = *t.field;
    std::size_t n = t.dim_v, d = t.dim_t();
    if (d == 0 || n == 0) return centroid_full(t);

    // With C = sum c_k C_k invertible, alpha^T = G C^-1 and beta = C^-1 G for
    // G = sum g_l C_l, leaving d + d^2 unknowns.
    Rng rng(0x63656e74);
    std::optional<Matrix> cinv;
    for (int attempt = 0; attempt < 32 && !cinv; ++attempt) {
        Matrix c(t.field, n, n);
        for (std::size_t k = 0; k < d; ++k) c = c + t.forms[k].scaled(f.element(rng.below(f.q())));
        cinv = inverse(c);
    }
    if (!cinv) return centroid_full(t);

    std::vector<Matrix> left(d), right(d);  // C_l C^-1 and C^-1 C_l
    for (std::size_t l = 0; l < d; ++l) {
        left[l] = t.forms[l] * *cinv;
        right[l] = *cinv * t.forms[l];
    }
    std::size_t nn = n * n;
    Matrix sys(t.field, 2 * d * nn, d + d * d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            Matrix a = left[l] * t.forms[k];   // alpha side
            Matrix b = t.forms[k] * right[l];  // beta side
            for (std::size_t x = 0; x < nn; ++x) {
                sys(2 * (k * nn + x), l) = a.data()[x];
                sys(2 * (k * nn + x) + 1, l) = b.data()[x];
            }
        }
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t x = 0; x < nn; ++x) {
                Fq c = f.neg(t.forms[l].data()[x]);
                sys(2 * (k * nn + x), d + k * d + l) = c;
                sys(2 * (k * nn + x) + 1, d + k * d + l) = c;
            }
    }
    AlgebraBasis out{t.field, AlgebraKind::Centroid, {}};
    for (const auto& v : kernel_basis(sys)) {
        Matrix g(t.field, n, n), ga(t.field, d, d);
        for (std::size_t l = 0; l < d; ++l) g = g + t.forms[l].scaled(v[l]);
        for (std::size_t i = 0; i < d * d; ++i) ga(i / d, i % d) = v[d + i];
        out.basis.push_back({(g * *cinv).transpose(), *cinv * g, ga});
    }
    return out;
}

// ---------------------------------------------------------------------------
// rewriting over the centroid

namespace {

// Greedy basis {A^i b_j}: returns the change-of-basis matrix with column
// j*e + i equal to A^i b_j, or nullopt if the orbits do not fill the space.
std::optional<Matrix> orbit_basis(const Matrix& a, unsigned e) {
    const FieldPtr& F = a.field();
    std::size_t n = a.rows();
    std::vector<Vec> cols;
    for (std::size_t s = 0; s < n && cols.size() < n; ++s) {
        Vec v(n);
        v[s] = F->one();
        auto trial = cols;
        trial.push_back(v);
        if (rank(Matrix::from_columns(F, n, trial)) < trial.size()) continue;
        for (unsigned i = 0; i < e; ++i) {
            cols.push_back(v);
            v = a.apply(v);
        }
    }
    if (cols.size() != n) return std::nullopt;
    Matrix s = Matrix::from_columns(F, n, cols);
    if (rank(s) != n) return std::nullopt;
    return s;
}

}  // namespace

FieldRewrite centroid_field_rewrite(const TensorHandle& t, std::uint64_t seed) {
    FieldRewrite out;
    const FieldPtr& P = t.field;
    if (P->e() != 1) throw Error(ErrorKind::BadInput, "centroid rewrite expects a prime-field tensor");
    AlgebraBasis cent = centroid(t);
    if (cent.dim() == 0 || !cent.is_commutative()) {
        out.reason = "centroid is not commutative";
        return out;
    }
    unsigned e = static_cast<unsigned>(cent.dim());
    if (t.dim_v != 6 * e || t.dim_t() != 3 * e) {
        out.status = RewriteStatus::WrongShape;
        std::ostringstream msg;
        msg << "dimensions (" << t.dim_v << ", " << t.dim_t() << ") are not (6e, 3e) for e = " << e;
        out.reason = msg.str();
        return out;
    }
    Rng rng(seed);
    std::optional<AlgElem> gen;
    UniPoly mp;
    for (int attempt = 0; attempt < 32 && !gen; ++attempt) {
        AlgElem x = cent.random_element(rng);
        mp = minimal_polynomial(cent.regular(x));
        if (mp.degree() == static_cast<int>(e) && is_irreducible(mp)) gen = x;
    }
    if (!gen) {
        out.reason = "no generator with irreducible minimal polynomial of full degree";
        return out;
    }

    FieldPtr F = field_make(P->p(), e);
    std::vector<Fq> mc;
    for (Fq c : mp.coeffs()) mc.push_back(Fq{c.v});
    Fq r = roots(UniPoly(F, mc)).at(0);

    Matrix rm(P, e, e);
    Fq ri = F->one();
    for (unsigned i = 0; i < e; ++i, ri = F->mul(ri, r)) {
        auto c = F->coeffs(ri);
        for (unsigned a = 0; a < e; ++a) rm(a, i) = Fq{c[a]};
    }
    Matrix rinv = inverse_or_throw(rm);

    auto sv = orbit_basis((*gen)[0], e);
    auto st = orbit_basis((*gen)[2], e);
    if (!sv || !st) {
        out.reason = "centroid action does not give a free module";
        return out;
    }
    out.phi_v = *sv * kron_identity(6, rinv);
    out.phi_t = *st * kron_identity(3, rinv);
    Matrix phi_t_inv = inverse_or_throw(out.phi_t);

    out.form = LinearFormMatrix::zero(F, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Vec w = phi_t_inv.apply(t.eval(sv->col(i * e), sv->col(j * e)));
            for (std::size_t k = 0; k < 3; ++k) {
                std::vector<std::uint32_t> c(e);
                for (unsigned a = 0; a < e; ++a) c[a] = w[k * e + a].v;
                out.form.slices[k](i, j) = F->from_coeffs(c);
            }
        }
    out.status = RewriteStatus::Ok;
    out.degree = e;
    out.field = F;
    out.root = r;
    return out;
}

// ---------------------------------------------------------------------------
// adjoint algebras and modules

AlgebraBasis adjoint_module(const LinearFormMatrix& m, const LinearFormMatrix& n) {
    if (m.rows() != m.cols() || n.rows() != n.cols() || m.rows() != n.rows() ||
        !(m.field->spec() == n.field->spec()))
        throw Error(ErrorKind::DimensionMismatch, "adjoint module needs square forms of equal size");
    const Field& f = *m.field;
    std::size_t s = m.rows(), ss = s * s;
    Matrix sys(m.field, 3 * ss, 2 * ss);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                std::size_t row = k * ss + i * s + j;
                for (std::size_t a = 0; a < s; ++a) {
                    sys(row, a * s + i) = n.slices[k](a, j);
                    sys(row, ss + a * s + j) = f.neg(m.slices[k](i, a));
                }
            }
    AlgebraBasis out{m.field, AlgebraKind::Module, {}};
    for (const auto& v : kernel_basis(sys)) {
        Matrix a(m.field, s, s), b(m.field, s, s);
        for (std::size_t i = 0; i < ss; ++i) {
            a(i / s, i % s) = v[i];
            b(i / s, i % s) = v[ss + i];
        }
        out.basis.push_back({a, b});
    }
    return out;
}

AlgebraBasis adjoint(const LinearFormMatrix& b) {
    AlgebraBasis out = adjoint_module(b, b);
    out.kind = AlgebraKind::Adjoint;
    if (out.dim() <= 8 && !out.is_closed()) throw Error(ErrorKind::Internal, "adjoint basis is not closed");
    return out;
}

AlgebraBasis adjoint(const TensorHandle& t) {
    if (t.dim_t() != 3) throw Error(ErrorKind::DimensionMismatch, "adjoint expects three forms");
    LinearFormMatrix m{t.field, {t.forms[0], t.forms[1], t.forms[2]}};
    return adjoint(m);
}

// ---------------------------------------------------------------------------
// star types

const char* to_string(StarType t) {
    switch (t) {
        case StarType::Orthogonal1: return "orthogonal";
        case StarType::LocalOrthogonal: return "local-orthogonal";
        case StarType::Exchange: return "exchange";
        case StarType::Symplectic2: return "symplectic";
        case StarType::Unitary1: return "unitary";
        case StarType::Other: return "other";
    }
    return "other";
}

namespace {

bool is_scalar_elem(const AlgebraBasis& a, const AlgElem& x) {
    Matrix r = a.regular(x);
    return r.is_scalar();
}

AlgElem shift(const AlgebraBasis& a, const AlgElem& x, Fq c) {
    return alg_sub(x, alg_scale(a.identity(), c));
}

// (x - r2)/(r1 - r2) for distinct roots of a quadratic minimal polynomial.
std::optional<AlgElem> exchange_idempotent(const AlgebraBasis& a, const AlgElem& x, const UniPoly& mp) {
    if (mp.degree() != 2) return std::nullopt;
    auto rs = roots(mp);
    if (rs.size() != 2) return std::nullopt;
    const Field& f = *a.field;
    AlgElem id = a.identity();
    for (int swap = 0; swap < 2; ++swap) {
        Fq r1 = rs[swap], r2 = rs[1 - swap];
        AlgElem e = alg_scale(shift(a, x, r2), f.inv(f.sub(r1, r2)));
        AlgElem es = a.star(e);
        if (alg_sub(a.mul(e, e), e) == a.zero() && alg_add(e, es) == id && alg_is_zero(a.mul(e, es)))
            return e;
    }
    return std::nullopt;
}

}  // namespace

StarTypeResult star_type(const AlgebraBasis& a, std::uint64_t seed) {
    StarTypeResult out;
    if (a.kind == AlgebraKind::Module) throw Error(ErrorKind::BadInput, "star type needs an algebra");
    std::size_t d = a.dim();
    if (d == 1) {
        out.type = StarType::Orthogonal1;
        return out;
    }
    if (d == 2) {
        const AlgElem* x = nullptr;
        for (const auto& b : a.basis)
            if (!is_scalar_elem(a, b)) {
                x = &b;
                break;
            }
        if (!x) {
            out.diagnostics = "no non-scalar basis element";
            return out;
        }
        UniPoly mp = minimal_polynomial(a.regular(*x));
        auto fac = factor_univariate(mp, seed);
        if (fac.size() == 2) {
            if (auto e = exchange_idempotent(a, *x, mp)) {
                out.type = StarType::Exchange;
                out.idempotent = e;
            } else {
                out.diagnostics = "split without an exchanged idempotent pair";
            }
        } else if (fac.size() == 1 && fac[0].poly.degree() == 1) {
            Fq r = roots(fac[0].poly).at(0);
            AlgElem nu = shift(a, *x, r);
            if (!alg_is_zero(nu) && alg_is_zero(a.mul(nu, nu))) {
                out.type = StarType::LocalOrthogonal;
                out.nilpotent = nu;
            }
        } else if (fac.size() == 1 && fac[0].poly.degree() == 2) {
            if (!(a.star(*x) == *x)) {
                out.type = StarType::Unitary1;
                out.generator = *x;
            } else {
                out.diagnostics = "quadratic field with trivial involution";
            }
        }
        return out;
    }
    if (d == 4) {
        Rng rng(seed);
        for (int attempt = 0; attempt < 32; ++attempt) {
            AlgElem x = a.random_element(rng);
            if (auto e = exchange_idempotent(a, x, minimal_polynomial(a.regular(x)))) {
                out.type = StarType::Symplectic2;
                out.idempotent = e;
                return out;
            }
        }
        out.diagnostics = "no symmetric idempotent pair found in 32 trials";
        return out;
    }
    out.diagnostics = "unexpected adjoint dimension " + std::to_string(d);
    return out;
}

// ---------------------------------------------------------------------------
// isotropic decompositions

namespace {

std::vector<Vec> column_space(const Matrix& m) {
    RrefResult r = rref(m.transpose());
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.matrix.row(i));
    return out;
}

}  // namespace

std::optional<Matrix> isotropic_decomposition(const LinearFormMatrix& b, const StarTypeResult& st) {
    if (!st.idempotent) return std::nullopt;
    std::size_t n = b.rows();
    const Matrix& x = (*st.idempotent)[0];
    auto u = column_space(x);
    auto w = column_space(Matrix::identity(b.field, n) - x);
    if (u.size() * 2 != n || w.size() * 2 != n) return std::nullopt;
    u.insert(u.end(), w.begin(), w.end());
    Matrix p = Matrix::from_columns(b.field, n, u);
    LinearFormMatrix c = congruence(b, p, p);
    for (const auto& s : c.slices)
        if (!s.block(0, 0, n / 2, n / 2).is_zero() || !s.block(n / 2, n / 2, n / 2, n / 2).is_zero())
            throw Error(ErrorKind::Internal, "idempotent does not split the form");
    return p;
}

std::optional<Matrix> isotropic_decomposition(const LinearFormMatrix& b, std::uint64_t seed) {
    if (!b.is_skew() || b.rows() != 6) throw Error(ErrorKind::NotSkew, "expected a skew 6x6 matrix");
    return isotropic_decomposition(b, star_type(adjoint(b), seed));
}

// ---------------------------------------------------------------------------
// totally isotropic subspaces

TiReport ti_count_bruteforce(const LinearFormMatrix& b, std::uint64_t limit) {
    if (!b.is_skew() || b.rows() != 6) throw Error(ErrorKind::NotSkew, "expected a skew 6x6 matrix");
    const Field& f = *b.field;
    const std::uint64_t q = f.q();
    // [6 choose 3]_q = (q^6-1)(q^5-1)(q^4-1) / ((q^3-1)(q^2-1)(q-1))
    long double g = 1;
    for (int i = 0; i < 3; ++i) g *= (std::pow((long double)q, 6 - i) - 1) / (std::pow((long double)q, i + 1) - 1);
    if (g > (long double)limit)
        throw Error(ErrorKind::TooLarge, "Gaussian binomial exceeds the enumeration limit");

    auto rows_for = [&](std::size_t pivot, const std::array<std::size_t, 3>& piv) {
        std::vector<std::size_t> freec;
        for (std::size_t c = pivot + 1; c < 6; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) freec.push_back(c);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < freec.size(); ++i) total *= q;
        std::vector<Vec> out;
        out.reserve(total);
        for (std::uint64_t code = 0; code < total; ++code) {
            Vec v(6);
            v[pivot] = f.one();
            std::uint64_t c = code;
            for (auto col : freec) {
                v[col] = f.element(c % q);
                c /= q;
            }
            out.push_back(std::move(v));
        }
        return out;
    };
    auto dot = [&](const Vec& x, const Vec& y) {
        Fq s{};
        for (std::size_t i = 0; i < 6; ++i)
            if (x[i].v && y[i].v) s = f.add(s, f.mul(x[i], y[i]));
        return s;
    };
    // r^T S_k for the three slices
    auto covec = [&](const Vec& r) {
        std::array<Vec, 3> out;
        for (int k = 0; k < 3; ++k) out[k] = b.slices[k].transpose().apply(r);
        return out;
    };
    auto orth = [&](const std::array<Vec, 3>& cv, const Vec& y) {
        for (int k = 0; k < 3; ++k)
            if (dot(cv[k], y).v) return false;
        return true;
    };

    TiReport rep;
    for (std::size_t p1 = 0; p1 < 6; ++p1)
        for (std::size_t p2 = p1 + 1; p2 < 6; ++p2)
            for (std::size_t p3 = p2 + 1; p3 < 6; ++p3) {
                std::array<std::size_t, 3> piv{p1, p2, p3};
                auto l1 = rows_for(p1, piv), l2 = rows_for(p2, piv), l3 = rows_for(p3, piv);
                for (const auto& r1 : l1) {
                    auto c1 = covec(r1);
                    for (const auto& r2 : l2) {
                        if (!orth(c1, r2)) continue;
                        auto c2 = covec(r2);
                        for (const auto& r3 : l3) {
                            if (!orth(c1, r3) || !orth(c2, r3)) continue;
                            ++rep.count;
                            if (rep.subspaces.size() < 64) {
                                Matrix m(b.field, 3, 6);
                                for (std::size_t j = 0; j < 6; ++j) {
                                    m(0, j) = r1[j];
                                    m(1, j) = r2[j];
                                    m(2, j) = r3[j];
                                }
                                rep.subspaces.push_back(std::move(m));
                            }
                        }
                    }
                }
            }
    if (rep.count <= 2)
        rep.count_class = std::to_string(rep.count);
    else if (rep.count == q + 1)
        rep.count_class = "q+1";
    else
        rep.count_class = "other";
    return rep;
}

// ---------------------------------------------------------------------------

bool verify_pseudo_isometry(const TensorHandle& s, const TensorHandle& t, const Matrix& pv, const Matrix& pt) {
    if (s.dim_v != t.dim_v || s.dim_t() != t.dim_t() || pv.rows() != s.dim_v || pv.cols() != s.dim_v ||
        pt.rows() != s.dim_t() || pt.cols() != s.dim_t() || !(s.field->spec() == t.field->spec()) ||
        !(pv.field()->spec() == s.field->spec()) || !(pt.field()->spec() == s.field->spec()))
        throw Error(ErrorKind::DimensionMismatch, "pseudo-isometry shapes do not match");
    if (!inverse(pv) || !inverse(pt)) return false;
    Matrix pvt = pv.transpose();
    for (std::size_t i = 0; i < t.dim_t(); ++i) {
        Matrix lhs = pvt * t.forms[i] * pv;
        Matrix rhs(s.field, s.dim_v, s.dim_v);
        for (std::size_t j = 0; j < s.dim_t(); ++j)
            if (pt(i, j).v) rhs = rhs + s.forms[j].scaled(pt(i, j));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace egroups
