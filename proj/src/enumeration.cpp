#include "egroups/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "egroups/errors.hpp"
#include "egroups/rng.hpp"

namespace egroups {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs body(i) for i in [0, n) on up to `jobs` threads.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::BadInput, "q must be a prime power");
    auto ps = prime_factors(q);
    if (ps.size() != 1) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
    std::uint32_t e = 0;
    for (std::uint64_t r = q; r > 1; r /= ps[0]) ++e;
    return {static_cast<std::uint32_t>(ps[0]), e};
}

ClassCount count_iso_classes(std::uint64_t q, unsigned jobs) {
    auto [p, e] = prime_power(q);
    return count_iso_classes(field_make(p, e), jobs);
}

ClassCount count_iso_classes(const FieldPtr& field, unsigned jobs) {
    auto t0 = Clock::now();
    const Field& f = *field;
    const std::uint64_t q = f.q();
    if (q > 65535) throw Error(ErrorKind::TooLarge, "class count limited to q < 2^16");

    ClassCount out;
    out.q = q;
    out.p = f.p();
    out.e = f.e();

    auto pack = [q](Fq a, Fq b, Fq x, Fq y) {
        return ((std::uint64_t(a.v) * q + b.v) * q + x.v) * q + y.v;
    };

    // Valid tuples in (a, b, x, y) code order.
    std::vector<std::array<Fq, 4>> tuples;
    for (std::uint32_t ac = 0; ac < q; ++ac) {
        for (std::uint32_t bc = 0; bc < q; ++bc) {
            Fq a{ac}, b{bc};
            if (!is_nonsingular(f, a, b)) continue;
            for (std::uint32_t xc = 0; xc < q; ++xc) {
                Fq x{xc};
                Fq rhs = f.add(f.mul(x, f.add(f.mul(x, x), a)), b);
                auto r = f.sqrt(rhs);
                if (!r) continue;
                tuples.push_back({a, b, x, *r});
                if (r->v != 0) tuples.push_back({a, b, x, f.neg(*r)});
            }
        }
    }
    std::sort(tuples.begin(), tuples.end());
    out.valid_pairs = tuples.size();
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i)
        index.emplace(pack(tuples[i][0], tuples[i][1], tuples[i][2], tuples[i][3]), static_cast<std::uint32_t>(i));
    auto at = [&](Fq a, Fq b, Fq x, Fq y) { return index.at(pack(a, b, x, y)); };

    // Union-find under the generators u = primitive and Frobenius.
    UnionFind uf(tuples.size());
    Fq g = f.primitive();
    Fq g2 = f.mul(g, g), g3 = f.mul(g2, g), g4 = f.mul(g2, g2), g6 = f.mul(g4, g2);
    for (std::uint32_t id = 0; id < tuples.size(); ++id) {
        const auto& t = tuples[id];
        uf.unite(id, at(f.mul(g4, t[0]), f.mul(g6, t[1]), f.mul(g2, t[2]), f.mul(g3, t[3])));
        if (f.e() > 1)
            uf.unite(id, at(f.frobenius(t[0], 1), f.frobenius(t[1], 1), f.frobenius(t[2], 1),
                              f.frobenius(t[3], 1)));
    }

    // Independent count: orbit-minimal keys.
    std::vector<ClassKey> keys(tuples.size());
    parallel_for(tuples.size(), jobs, [&](std::size_t i) {
        const auto& t = tuples[i];
        keys[i] = canonical_key(EllipticCurve{field, t[0], t[1]}, ECPoint::affine(t[2], t[3]));
    });

    std::map<std::uint32_t, ClassKey> key_of_root;
    std::map<ClassKey, std::size_t> sizes;
    bool agree = true;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
        auto [it, fresh] = key_of_root.emplace(root, keys[i]);
        if (!fresh && it->second != keys[i]) agree = false;
        ++sizes[keys[i]];
    }
    out.classes = key_of_root.size();
    out.key_classes = sizes.size();
    out.partitions_agree = agree && out.classes == out.key_classes;
    for (const auto& [k, n] : sizes) {
        out.representatives.push_back(k);
        out.orbit_sizes.push_back(n);
    }
    out.seconds = ms_since(t0) / 1000.0;
    return out;
}

// ---------------------------------------------------------------------------

double SurveyRow::orthogonal_fraction() const {
    return fraction(StarType::Orthogonal1) + fraction(StarType::LocalOrthogonal);
}

LinearFormMatrix survey_sample(const FieldPtr& field, std::uint64_t seed, std::size_t index,
                               std::size_t* rejected) {
    Rng rng = Rng::derive(seed, index);
    std::size_t misses = 0;
    for (;;) {
        // 36 linear forms, 108 coefficients; skew part of the result.
        LinearFormMatrix b = LinearFormMatrix::zero(field, 6, 6);
        for (auto& s : b.slices) {
            Matrix a = random_matrix(field, 6, 6, rng);
            s = a - a.transpose();
        }
        TernaryCubic pf = pfaffian6(b);
        if (!pf.is_zero() && is_smooth(pf)) {
            if (rejected) *rejected = misses;
            return b;
        }
        ++misses;
    }
}

SurveyRow adjoint_survey(std::uint32_t p, std::size_t samples, std::uint64_t seed, unsigned jobs) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "survey needs a prime p");
    FieldPtr field = field_make(p, 1);
    struct Outcome {
        StarType type = StarType::Other;
        bool decomposable = false;
        std::size_t rejected = 0;
    };
    std::vector<Outcome> res(samples);
    parallel_for(samples, jobs, [&](std::size_t i) {
        Outcome& o = res[i];
        LinearFormMatrix b = survey_sample(field, seed, i, &o.rejected);
        StarTypeResult st = star_type(adjoint(b), seed + i);
        o.type = st.type;
        o.decomposable = isotropic_decomposition(b, st).has_value();
    });

    SurveyRow row;
    row.p = p;
    row.samples = samples;
    row.seed = seed;
    for (const auto& o : res) {
        ++row.counts[static_cast<std::size_t>(o.type)];
        row.rejected += o.rejected;
        if (!o.decomposable) {
            ++row.without_decomposition;
            if (o.type == StarType::Unitary1) ++row.unitary_without_decomposition;
        }
    }
    return row;
}

// ---------------------------------------------------------------------------

EGroupSpec random_egroup(const FieldPtr& field, std::uint64_t seed) {
    const Field& f = *field;
    Rng rng(seed);
    for (;;) {
        Fq a{static_cast<std::uint32_t>(rng.below(f.q()))};
        Fq b{static_cast<std::uint32_t>(rng.below(f.q()))};
        if (!is_nonsingular(f, a, b)) continue;
        for (int tries = 0; tries < 64; ++tries) {
            Fq x{static_cast<std::uint32_t>(rng.below(f.q()))};
            auto y = f.sqrt(f.add(f.mul(x, f.add(f.mul(x, x), a)), b));
            if (!y) continue;
            Fq yy = rng.below(2) ? f.neg(*y) : *y;
            return egroup_make(EllipticCurve{field, a, b}, ECPoint::affine(x, yy));
        }
    }
}

std::vector<TimingRow> timing_harness(const std::vector<std::uint64_t>& qs, std::uint64_t seed,
                                      unsigned instances) {
    std::vector<TimingRow> rows;
    for (std::uint64_t q : qs) {
        auto [p, e] = prime_power(q);
        FieldPtr field = field_make(p, e);
        std::vector<double> rec, iso;
        for (unsigned i = 0; i < instances; ++i) {
            Rng rng = Rng::derive(seed, q * 16 + i);
            EGroupSpec spec = random_egroup(field, rng.next());
            TensorHandle source = flatten_to_prime(spec.b);
            TensorHandle scrambled = scramble(source, rng.next());

            auto t0 = Clock::now();
            RecognitionReport r = recognize(scrambled, rng.next());
            rec.push_back(ms_since(t0));
            if (r.status != RecognitionStatus::Elliptic)
                throw Error(ErrorKind::Internal, "timing instance not recognized: " + r.reason);

            t0 = Clock::now();
            IsoCoset c = iso_coset(source, scrambled, rng.next());
            iso.push_back(ms_since(t0));
            if (!c.isomorphic) throw Error(ErrorKind::Internal, "timing instance failed its self-isotest");
        }
        auto median = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        rows.push_back({q, median(rec), median(iso)});
    }
    return rows;
}

std::vector<std::uint64_t> timing_sizes(std::uint64_t qmax) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 5; q <= qmax;) {
        out.push_back(q);
        std::uint64_t n = std::max<std::uint64_t>(q + 1, (q * 3 + 1) / 2);
        while (!is_prime(n)) ++n;
        q = n;
    }
    return out;
}

}  // namespace egroups
