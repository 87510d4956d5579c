#include "egroups/poly.hpp"

#include <algorithm>

#include "egroups/errors.hpp"
#include "egroups/rng.hpp"

namespace egroups {

UniPoly::UniPoly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(FieldPtr field, Fq c) { return UniPoly(std::move(field), {c}); }

UniPoly UniPoly::x(FieldPtr field) { return UniPoly(std::move(field), {Fq{0}, Fq{1}}); }

UniPoly UniPoly::linear_root(FieldPtr field, Fq r) {
    Fq nr = field->neg(r);
    return UniPoly(std::move(field), {nr, Fq{1}});
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

UniPoly UniPoly::monic() const {
    if (c_.empty() || c_.back().v == 1) return *this;
    return scaled(field_->inv(c_.back()));
}

UniPoly UniPoly::scaled(Fq c) const {
    std::vector<Fq> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], c);
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<Fq> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
    return UniPoly(field_, std::move(out));
}

Fq UniPoly::eval(Fq x) const {
    Fq acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const Field& f = *(a.field_ ? a.field_ : b.field_);
    std::vector<Fq> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_ ? a.field_ : b.field_, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    const Field& f = *(a.field_ ? a.field_ : b.field_);
    std::vector<Fq> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_ ? a.field_ : b.field_, std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly(a.field_ ? a.field_ : b.field_);
    const Field& f = *a.field_;
    std::vector<Fq> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].v == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return UniPoly(a.field_, std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    const Field& f = *b.field();
    if (a.degree() < b.degree()) return {UniPoly(b.field()), a};
    std::vector<Fq> r = a.coeffs();
    std::vector<Fq> q(r.size() - b.coeffs().size() + 1);
    Fq inv_lead = f.inv(b.lead());
    const auto& bc = b.coeffs();
    for (std::size_t k = q.size(); k-- > 0;) {
        Fq c = f.mul(r[k + bc.size() - 1], inv_lead);
        q[k] = c;
        if (c.v == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, bc[j]));
    }
    return {UniPoly(b.field(), std::move(q)), UniPoly(b.field(), std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t n, const UniPoly& m) {
    UniPoly result = UniPoly::constant(m.field(), Fq{1}) % m;
    UniPoly b = base % m;
    while (n) {
        if (n & 1) result = (result * b) % m;
        n >>= 1;
        if (n) b = (b * b) % m;
    }
    return result;
}

namespace {

// f(x) = g(x^p) -> g with p-th roots of coefficients.
UniPoly pth_root(const UniPoly& f) {
    const Field& F = *f.field();
    std::uint32_t p = F.p();
    std::vector<Fq> out(f.degree() / p + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.frobenius(f.coeff(i * p), F.e() - 1);
    return UniPoly(f.field(), std::move(out));
}

void squarefree(const UniPoly& f, unsigned mult, std::vector<Factor>& out) {
    UniPoly c = gcd(f, f.derivative());
    UniPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i * mult});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * f.field()->p(), out);
}

// a^((Q^d - 1)/2) mod f with Q = field order, via the norm a * a^Q * ... * a^(Q^(d-1)).
UniPoly half_power(const UniPoly& a, unsigned d, const UniPoly& f) {
    std::uint64_t q = f.field()->q();
    UniPoly t = a % f;
    UniPoly acc = t;
    for (unsigned i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        acc = (acc * t) % f;
    }
    return powmod(acc, (q - 1) / 2, f);
}

void equal_degree(const UniPoly& f, unsigned d, Rng& rng, std::vector<UniPoly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& F = f.field();
    for (;;) {
        std::vector<Fq> c(f.degree());
        for (auto& x : c) x = F->element(rng.below(F->q()));
        UniPoly a(F, std::move(c));
        if (a.degree() <= 0) continue;
        UniPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
        UniPoly h = half_power(a, d, f) - UniPoly::constant(F, Fq{1});
        g = gcd(h, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

bool factor_less(const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    const auto& x = a.poly.coeffs();
    const auto& y = b.poly.coeffs();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
    return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> factor_univariate(const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    std::vector<Factor> sqf;
    if (f.degree() > 0) squarefree(f.monic(), 1, sqf);

    Rng rng(seed);
    const FieldPtr& F = f.field();
    std::vector<Factor> out;
    for (const auto& [g0, mult] : sqf) {
        // distinct-degree
        UniPoly g = g0;
        UniPoly xp = UniPoly::x(F);
        const UniPoly x = UniPoly::x(F);
        for (unsigned d = 1; 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
            xp = powmod(xp, F->q(), g);
            UniPoly h = gcd(xp - x, g);
            if (h.degree() > 0) {
                std::vector<UniPoly> parts;
                equal_degree(h, d, rng, parts);
                for (auto& p : parts) out.push_back({std::move(p), mult});
                g = g / h;
                xp = xp % g;
            }
        }
        if (g.degree() > 0) out.push_back({g.monic(), mult});
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

bool is_irreducible(const UniPoly& f) {
    if (f.degree() <= 0) return false;
    auto fac = factor_univariate(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

std::vector<Fq> roots(const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<Fq> out;
    if (f.degree() <= 0) return out;
    const FieldPtr& F = f.field();
    UniPoly m = f.monic();
    // restrict to the split part x^q - x
    UniPoly xq = powmod(UniPoly::x(F), F->q(), m);
    UniPoly g = gcd(xq - UniPoly::x(F), m);
    if (g.degree() <= 0) return out;
    Rng rng(seed);
    std::vector<UniPoly> lin;
    equal_degree(g, 1, rng, lin);
    for (const auto& l : lin) out.push_back(F->neg(l.coeff(0)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace egroups
