#pragma once

#include <cstdint>
#include <cstddef>

namespace gcomm {

/// Smallest k with 2^k >= v (v >= 1).
inline unsigned ceil_log2(std::uint64_t v) {
    unsigned k = 0;
    std::uint64_t p = 1;
    while (p < v) {
        p <<= 1;
        ++k;
    }
    return k;
}

/// Field width, in bits, for values in [0, n_values). Never zero, so a
/// one-value domain still occupies one bit on the wire.
inline unsigned bit_width_for(std::uint64_t n_values) {
    unsigned w = ceil_log2(n_values);
    return w == 0 ? 1 : w;
}

}  // namespace gcomm
