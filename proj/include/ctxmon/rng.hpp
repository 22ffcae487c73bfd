#pragma once

#include <cmath>
#include <cstdint>

namespace ctxmon {

// splitmix64 step; also used as a seed-mixing hash.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic sub-stream seed (job-count independent trial seeds).
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    uint64_t s = base ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return splitmix64(s);
}

// Self-contained generator: identical draws on every platform for a fixed
// seed, unlike std::*_distribution.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // burn-in so near-zero seeds decorrelate
        splitmix64(state_);
    }

    uint64_t next_u64() { return splitmix64(state_); }

    // [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n); n > 0
    uint64_t uniform_index(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // standard normal, Box-Muller with cached spare
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace ctxmon
