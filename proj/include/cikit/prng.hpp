#pragma once

#include <cmath>
#include <cstdint>

namespace cikit {

// splitmix64 stream. Deterministic across platforms, unlike the distributions
// in <random>, so seeded runs produce byte-identical output everywhere.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool(double prob_true = 0.5) { return next_unit() < prob_true; }

    // Standard normal via Box-Muller.
    double next_normal() {
        double u1 = next_unit();
        double u2 = next_unit();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Derives an independent stream for item `index` of a sharded run.
    static Prng derive(std::uint64_t seed, std::uint64_t index) {
        Prng mixer(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
        return Prng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

}  // namespace cikit
