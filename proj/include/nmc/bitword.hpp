#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nmc {

// Fixed-length bit vector over GF(2), at most 64 bits. Position 0 is the
// first bit of the word and renders as the most significant bit of the
// hex/binary text forms. Length is fixed at construction; XOR requires
// equal lengths. Treat instances as values: cheap to copy, safe to share.
class BitWord {
public:
    BitWord() = default;

    explicit BitWord(uint32_t len, uint64_t position_mask = 0) : len_(len), bits_(position_mask) {
        if (len > 64) throw std::invalid_argument("BitWord: length > 64 unsupported");
        bits_ &= mask_for(len);
    }

    // "1011" -> positions 0,2,3 set
    static BitWord from_bits(std::string_view s) {
        BitWord w(static_cast<uint32_t>(s.size()));
        for (uint32_t i = 0; i < w.len_; ++i) {
            if (s[i] == '1') w.bits_ |= (1ULL << i);
            else if (s[i] != '0') throw std::invalid_argument("BitWord: bad bit char");
        }
        return w;
    }

    // Hex text form: most significant nibble first, position 0 at the top
    // bit. len must be supplied since it need not be a multiple of 4.
    static BitWord from_hex(std::string_view hex, uint32_t len) {
        if (len > 64) throw std::invalid_argument("BitWord: length > 64 unsupported");
        const uint32_t digits = (len + 3) / 4;
        if (hex.size() != digits)
            throw std::invalid_argument("BitWord: hex length mismatch");
        uint64_t value = 0;
        for (char c : hex) {
            value <<= 4;
            if (c >= '0' && c <= '9') value |= static_cast<uint64_t>(c - '0');
            else if (c >= 'a' && c <= 'f') value |= static_cast<uint64_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') value |= static_cast<uint64_t>(c - 'A' + 10);
            else throw std::invalid_argument("BitWord: bad hex char");
        }
        if (len < 4 * digits && (value >> len) != 0)
            throw std::invalid_argument("BitWord: hex value exceeds bit length");
        BitWord w(len);
        for (uint32_t i = 0; i < len; ++i)
            if ((value >> (len - 1 - i)) & 1) w.bits_ |= (1ULL << i);
        return w;
    }

    // Bits of idx map to positions LSB-first; used to enumerate words.
    static BitWord from_index(uint32_t len, uint64_t idx) { return BitWord(len, idx); }

    uint32_t length() const { return len_; }
    bool get(uint32_t pos) const {
        check_pos(pos);
        return (bits_ >> pos) & 1;
    }
    BitWord& set(uint32_t pos, bool v) {
        check_pos(pos);
        if (v) bits_ |= (1ULL << pos);
        else bits_ &= ~(1ULL << pos);
        return *this;
    }

    // Raw mask with position i at bit i.
    uint64_t mask() const { return bits_; }
    uint64_t to_index() const { return bits_; }

    uint32_t weight() const { return static_cast<uint32_t>(std::popcount(bits_)); }
    bool is_zero() const { return bits_ == 0; }

    BitWord operator^(const BitWord& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitWord: length mismatch");
        return BitWord(len_, bits_ ^ o.bits_);
    }

    friend bool operator==(const BitWord&, const BitWord&) = default;

    std::string to_bits() const {
        std::string s(len_, '0');
        for (uint32_t i = 0; i < len_; ++i)
            if ((bits_ >> i) & 1) s[i] = '1';
        return s;
    }

    std::string to_hex() const {
        const uint32_t digits = (len_ + 3) / 4;
        uint64_t value = 0;
        for (uint32_t i = 0; i < len_; ++i)
            if ((bits_ >> i) & 1) value |= (1ULL << (len_ - 1 - i));
        std::string s(digits, '0');
        for (uint32_t d = 0; d < digits; ++d) {
            uint32_t nib = static_cast<uint32_t>((value >> (4 * (digits - 1 - d))) & 0xf);
            s[d] = "0123456789abcdef"[nib];
        }
        return s;
    }

    static uint64_t mask_for(uint32_t len) {
        return len >= 64 ? ~0ULL : ((1ULL << len) - 1);
    }

private:
    void check_pos(uint32_t pos) const {
        if (pos >= len_) throw std::out_of_range("BitWord: position out of range");
    }

    uint32_t len_ = 0;
    uint64_t bits_ = 0;
};

inline uint32_t hamming_weight(const BitWord& x) { return x.weight(); }

inline uint32_t hamming_distance(const BitWord& x, const BitWord& y) {
    return (x ^ y).weight();
}

}  // namespace nmc
