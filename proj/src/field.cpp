#include "egroups/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "egroups/errors.hpp"
#include "egroups/poly.hpp"

namespace egroups {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t FieldSpec::order() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    return q;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t p = spec_.p, e = spec_.e;
    q_ = static_cast<std::uint32_t>(spec_.order());
    pow_p_.resize(e);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i < e; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    auto slow_pow = [&](std::uint32_t a, std::uint64_t n) {
        std::uint32_t r = 1;
        while (n) {
            if (n & 1) r = mul_codes_slow(r, a);
            a = mul_codes_slow(a, a);
            n >>= 1;
        }
        return r;
    };

    const auto factors = prime_factors(q_ - 1);
    std::uint32_t g = 1;
    for (std::uint32_t c = 1; c < q_; ++c) {
        if (q_ == 2) break;
        bool ok = slow_pow(c, q_ - 1) == 1;
        for (auto l : factors) ok = ok && slow_pow(c, (q_ - 1) / l) != 1;
        if (ok) {
            g = c;
            break;
        }
    }

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = exp_[k + q_ - 1] = x;
        log_[x] = k;
        x = mul_codes_slow(x, g);
    }
    if (e > 1) {
        zech_.resize(q_ - 1);
        for (std::uint32_t n = 0; n < q_ - 1; ++n) {
            std::uint32_t y = exp_[n];
            std::uint32_t c0 = y % p;
            std::uint32_t s = (c0 == p - 1) ? y - (p - 1) : y + 1;
            zech_[n] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
        }
    }
    half_ = inv(from_int(2));
}

std::uint32_t Field::mul_codes_slow(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec_.p, e = spec_.e;
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
    std::vector<std::uint64_t> x(e), y(e), z(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        x[i] = a % p;
        a /= p;
        y[i] = b % p;
        b /= p;
    }
    for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    for (std::uint32_t k = 2 * e - 1; k-- > e;) {
        std::uint64_t c = z[k];
        if (!c) continue;
        for (std::uint32_t j = 0; j < e; ++j) z[k - e + j] = (z[k - e + j] + (p - c) * spec_.modulus[j]) % p;
        z[k] = 0;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = e; i-- > 0;) out = out * p + static_cast<std::uint32_t>(z[i]);
    return out;
}

Fq Field::add_ext(Fq a, Fq b) const {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    std::uint32_t la = log_[a.v], lb = log_[b.v];
    std::uint32_t n = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::int32_t z = zech_[n];
    if (z < 0) return {0};
    return {exp_[la + static_cast<std::uint32_t>(z)]};
}

Fq Field::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(spec_.p);
    if (r < 0) r += spec_.p;
    return {static_cast<std::uint32_t>(r)};
}

Fq Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > spec_.e) throw Error(ErrorKind::BadInput, "too many coefficients for field element");
    std::uint32_t out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= spec_.p) throw Error(ErrorKind::BadInput, "coefficient not reduced mod p");
        out += coeffs[i] * pow_p_[i];
    }
    return {out};
}

std::vector<std::uint32_t> Field::coeffs(Fq x) const {
    std::vector<std::uint32_t> out(spec_.e);
    std::uint32_t v = x.v;
    for (std::uint32_t i = 0; i < spec_.e; ++i) {
        out[i] = v % spec_.p;
        v /= spec_.p;
    }
    return out;
}

Fq Field::element(std::uint64_t code) const {
    if (code >= q_) throw Error(ErrorKind::BadInput, "element code out of range");
    return {static_cast<std::uint32_t>(code)};
}

Fq Field::alpha() const {
    if (spec_.e == 1) return neg(from_int(spec_.modulus[0]));
    return {spec_.p};
}

Fq Field::inv(Fq a) const {
    if (a.v == 0) throw Error(ErrorKind::BadInput, "inverse of zero");
    std::uint32_t l = log_[a.v];
    return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Fq Field::pow(Fq a, std::uint64_t n) const {
    if (n == 0) return one();
    if (a.v == 0) return zero();
    std::uint64_t k = (std::uint64_t(log_[a.v]) * (n % (q_ - 1))) % (q_ - 1);
    return {exp_[k]};
}

Fq Field::frobenius(Fq a, unsigned k) const {
    k %= spec_.e;
    if (k == 0 || a.v == 0) return a;
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk = pk * spec_.p % (q_ - 1);
    return {exp_[(std::uint64_t(log_[a.v]) * pk) % (q_ - 1)]};
}

std::optional<Fq> Field::sqrt(Fq a) const {
    if (a.v == 0) return a;
    std::uint32_t l = log_[a.v];
    if (l % 2) return std::nullopt;
    Fq r{exp_[l / 2]};
    Fq s = neg(r);
    return std::min(r, s);
}

std::vector<Fq> Field::nth_roots(Fq c, std::uint64_t n) const {
    std::vector<Fq> out;
    if (n == 0) return out;
    if (c.v == 0) {
        out.push_back(zero());
        return out;
    }
    // x = g^k with n k = log c mod (q-1)
    const std::uint64_t m = q_ - 1;
    std::uint64_t lc = log_[c.v];
    std::uint64_t g = std::gcd(n % m == 0 ? m : n % m, m);
    if (lc % g) return out;
    for (std::uint64_t k = 0; k < m; k += 1) {
        if ((n % m) * k % m == lc) out.push_back({exp_[k]});
        if (out.size() == g) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Fq frobenius(const Field& field, Fq x, unsigned k) { return field.frobenius(x, k); }

std::vector<Fq> roots_of_unity(const Field& field, unsigned n) { return field.nth_roots(field.one(), n); }

Fq primitive_element(const Field& field) { return field.primitive(); }

FieldPtr field_make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus) {
    if (p == 2 || p == 3) throw Error(ErrorKind::BadCharacteristic, "characteristic 2 and 3 are not supported");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(ErrorKind::BadInput, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > Field::kMaxOrder) throw Error(ErrorKind::TooLarge, "field order exceeds table limit");
    }

    auto build = [](FieldSpec s) { return FieldPtr(new Field(std::move(s))); };
    if (e == 1 && !modulus) return build(FieldSpec{p, 1, {0, 1}});

    FieldPtr prime = build(FieldSpec{p, 1, {0, 1}});
    auto irreducible = [&](const std::vector<std::uint32_t>& m) {
        std::vector<Fq> c(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) c[i] = Fq{m[i]};
        return is_irreducible(UniPoly(prime, std::move(c)));
    };

    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != e + 1 || m.back() != 1)
            throw Error(ErrorKind::BadInput, "modulus must be monic of degree e");
        for (auto c : m)
            if (c >= p) throw Error(ErrorKind::BadInput, "modulus coefficient not reduced mod p");
        if (!irreducible(m)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
        return build(FieldSpec{p, e, m});
    }

    for (std::uint64_t code = 0; code < q; ++code) {
        std::vector<std::uint32_t> m(e + 1);
        std::uint64_t v = code;
        for (std::uint32_t i = 0; i < e; ++i) {
            m[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        m[e] = 1;
        if (m[0] == 0) continue;
        if (irreducible(m)) return build(FieldSpec{p, e, std::move(m)});
    }
    throw Error(ErrorKind::Internal, "no irreducible modulus found");
}

FieldEmbedding embed_extension(const FieldPtr& small, unsigned k) {
    if (k == 0) throw Error(ErrorKind::BadInput, "extension degree must be positive");
    FieldEmbedding emb;
    emb.small = small;
    emb.big = k == 1 ? small : field_make(small->p(), small->e() * k);
    const Field& B = *emb.big;
    Fq root = B.zero();
    if (small->e() > 1) {
        std::vector<Fq> c;
        for (auto m : small->spec().modulus) c.push_back(B.from_int(m));
        auto r = roots(UniPoly(emb.big, std::move(c)));
        if (r.empty()) throw Error(ErrorKind::Internal, "modulus has no root in the extension");
        root = r.front();
    }
    emb.image.resize(small->q());
    emb.preimage.assign(B.q(), -1);
    for (std::uint32_t code = 0; code < small->q(); ++code) {
        auto cs = small->coeffs(Fq{code});
        Fq acc = B.zero(), pw = B.one();
        for (auto c : cs) {
            acc = B.add(acc, B.mul(B.from_int(c), pw));
            pw = B.mul(pw, root);
        }
        emb.image[code] = acc;
        emb.preimage[acc.v] = static_cast<std::int32_t>(code);
    }
    return emb;
}

FieldPtr field_make(const FieldSpec& spec) { return field_make(spec.p, spec.e, spec.modulus); }

}  // namespace egroups
