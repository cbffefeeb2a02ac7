#include "gcomm/determinant.hpp"

#include <stdexcept>
#include <vector>

namespace gcomm {

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("det_integer: 128-bit overflow");
    return r;
}

Wide checked_sub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("det_integer: 128-bit overflow");
    return r;
}

std::int64_t bareiss(std::vector<std::vector<Wide>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Wide prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Wide num = checked_sub(checked_mul(m[i][j], m[k][k]),
                                       checked_mul(m[i][k], m[k][j]));
                m[i][j] = num / prev;  // exact division in Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Wide det = sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
    if (det > Wide(INT64_MAX) || det < Wide(INT64_MIN))
        throw std::overflow_error("det_integer: result exceeds 64 bits");
    return static_cast<std::int64_t>(det);
}

}  // namespace

std::int64_t det_integer(const DiGraph& d) {
    const std::size_t n = d.n_vertices();
    if (n > 64) throw std::invalid_argument("det_integer: dimension above 64");
    std::vector<std::vector<Wide>> m(n, std::vector<Wide>(n, 0));
    for (const auto& [u, v] : d.arcs()) m[u][v] = 1;
    return bareiss(m);
}

std::int64_t det_integer_matrix(std::vector<std::vector<std::int64_t>> in) {
    const std::size_t n = in.size();
    if (n > 64) throw std::invalid_argument("det_integer: dimension above 64");
    std::vector<std::vector<Wide>> m(n, std::vector<Wide>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (in[i].size() != n) throw std::invalid_argument("det_integer: not square");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = in[i][j];
    }
    return bareiss(m);
}

}  // namespace gcomm
