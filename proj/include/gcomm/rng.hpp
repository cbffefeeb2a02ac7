#pragma once

#include <cstdint>

namespace gcomm {

/// splitmix64 step; used to derive independent sub-seeds from one user seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x517cc1b727220a95ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// Small deterministic generator (xorshift-style splitmix stream). We avoid
/// std::uniform_* distributions so byte-identical output depends only on the
/// seed, not on the standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    /// Bernoulli(p) with p given as numerator/2^32.
    bool next_bool_p32(std::uint32_t p_num) {
        return static_cast<std::uint32_t>(next_u64() >> 32) < p_num;
    }

    bool next_bool(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_bool_p32(static_cast<std::uint32_t>(p * 4294967296.0));
    }

private:
    std::uint64_t state_;
};

}  // namespace gcomm
