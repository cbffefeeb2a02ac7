#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomm {

/// Message payload with explicit length in bits. Bit i lives at
/// (bytes[i/8] >> (i%8)) & 1; multi-bit fields are appended LSB-first.
class BitString {
public:
    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    void push_bit(bool b) {
        if (nbits_ % 8 == 0) bytes_.push_back(0);
        if (b) bytes_[nbits_ / 8] |= static_cast<std::uint8_t>(1u << (nbits_ % 8));
        ++nbits_;
    }

    void push_uint(std::uint64_t value, unsigned width) {
        if (width > 64) throw std::invalid_argument("push_uint: width above 64");
        if (width < 64 && (value >> width) != 0)
            throw std::invalid_argument("push_uint: value does not fit field width");
        for (unsigned i = 0; i < width; ++i) push_bit((value >> i) & 1);
    }

    bool bit(std::size_t i) const {
        if (i >= nbits_) throw std::out_of_range("BitString::bit");
        return (bytes_[i / 8] >> (i % 8)) & 1;
    }

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(bytes_.size() * 2);
        for (std::uint8_t b : bytes_) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 0xf]);
        }
        if (s.empty()) s = "-";
        return s;
    }

    bool operator==(const BitString& o) const {
        return nbits_ == o.nbits_ && bytes_ == o.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

/// Cursor over a received payload. Reading past the end, or leaving bits
/// unread when the protocol expects none, is a framing violation.
class BitReader {
public:
    explicit BitReader(const BitString& s) : s_(&s) {}

    bool read_bit() {
        if (pos_ >= s_->size()) throw std::runtime_error("protocol violation: message truncated");
        return s_->bit(pos_++);
    }

    std::uint64_t read_uint(unsigned width) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i)
            if (read_bit()) v |= (1ULL << i);
        return v;
    }

    std::size_t remaining() const { return s_->size() - pos_; }

    void expect_end() const {
        if (pos_ != s_->size())
            throw std::runtime_error("protocol violation: trailing bits in message");
    }

private:
    const BitString* s_;
    std::size_t pos_ = 0;
};

}  // namespace gcomm
