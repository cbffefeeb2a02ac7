#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomm {

/// Fixed-length bit string x in {0,1}^n. Bit i of a packed integer value is
/// (value >> i) & 1, i.e. x_1 of the 1-indexed math notation lives in the
/// least significant bit.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : bits_(n, false) {}

    static BitVector from_value(std::uint64_t value, std::size_t n) {
        if (n < 64 && (value >> n) != 0)
            throw std::invalid_argument("BitVector: value does not fit in " + std::to_string(n) + " bits");
        BitVector x(n);
        for (std::size_t i = 0; i < n && i < 64; ++i) x.bits_[i] = (value >> i) & 1;
        return x;
    }

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_.at(i); }
    void set(std::size_t i, bool v) { bits_.at(i) = v; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (bool b : bits_) w += b ? 1 : 0;
        return w;
    }

    std::uint64_t to_value() const {
        if (size() > 64) throw std::invalid_argument("BitVector: wider than 64 bits");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (bits_[i]) v |= (1ULL << i);
        return v;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    bool operator==(const BitVector& o) const { return bits_ == o.bits_; }

private:
    std::vector<bool> bits_;
};

inline std::size_t hamming_weight(const BitVector& x) { return x.weight(); }

/// IP_n(x, y) = |x AND y| mod 2.
inline int inner_product(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("inner_product: length mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc ^= (x[i] && y[i]) ? 1 : 0;
    return acc;
}

/// n-by-n bit matrix, row-major; entry (i,j) of a packed value is bit i*n+j.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), bits_(n * n, false) {}

    static BitMatrix from_value(std::uint64_t value, std::size_t n) {
        const std::size_t nn = n * n;
        if (nn < 64 && (value >> nn) != 0)
            throw std::invalid_argument("BitMatrix: value does not fit in " + std::to_string(nn) + " bits");
        BitMatrix m(n);
        for (std::size_t k = 0; k < nn && k < 64; ++k) m.bits_[k] = (value >> k) & 1;
        return m;
    }

    std::size_t dim() const { return n_; }
    bool at(std::size_t i, std::size_t j) const { return bits_.at(i * n_ + j); }
    void set(std::size_t i, std::size_t j, bool v) { bits_.at(i * n_ + j) = v; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (bool b : bits_) w += b ? 1 : 0;
        return w;
    }

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    std::size_t n_ = 0;
    std::vector<bool> bits_;
};

/// |X AND Y| for equal-shape matrices.
inline std::size_t and_weight(const BitMatrix& x, const BitMatrix& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("and_weight: shape mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j)
            w += (x.at(i, j) && y.at(i, j)) ? 1 : 0;
    return w;
}

}  // namespace gcomm
