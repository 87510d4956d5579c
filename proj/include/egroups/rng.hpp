#pragma once

#include <cstdint>
#include <random>

namespace egroups {

/// Seeded generator shared by every randomized routine.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use plain modular reduction instead of
/// std::uniform_int_distribution so that streams are identical across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish draw from [0, n); n must be nonzero.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    /// Independent stream for sub-task `index`, stable under reordering.
    static Rng derive(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix(seed ^ splitmix(index + 0x9e3779b97f4a7c15ULL)));
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace egroups
