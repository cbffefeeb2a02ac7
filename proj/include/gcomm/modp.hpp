#pragma once

#include <cstdint>

namespace gcomm {

/// Arithmetic in F_p with the fixed Mersenne prime p = 2^31 - 1. Products of
/// two residues fit in 64 bits, so everything stays single-word.
inline constexpr std::uint64_t kFieldPrime = 2147483647ULL;  // 2^31 - 1

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kFieldPrime ? s - kFieldPrime : s;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kFieldPrime - b;
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    return (a * b) % kFieldPrime;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    base %= kFieldPrime;
    while (exp) {
        if (exp & 1) acc = mod_mul(acc, base);
        base = mod_mul(base, base);
        exp >>= 1;
    }
    return acc;
}

inline std::uint64_t mod_inv(std::uint64_t a) {
    return mod_pow(a, kFieldPrime - 2);
}

}  // namespace gcomm
