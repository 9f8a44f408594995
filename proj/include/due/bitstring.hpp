#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "due/error.hpp"

namespace due {

/// Fixed-length binary string. Bit 0 is the least significant bit and the
/// rightmost character of the textual form; bit length()-1 is the leftmost.
///
/// Storage is little-endian 64-bit words; bits above length() are kept zero
/// so that equality and hashing can work on whole words.
class BitString {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;
    /// Widest string that to_uint()/from_uint() accept.
    static constexpr std::size_t integer_width = 64;

    /// All-zero string of the given length.
    explicit BitString(std::size_t length) : length_(length), words_(word_count(length), 0) {
        if (length == 0) throw error(errc::empty_input, "bit string length must be at least 1");
    }

    /// Takes ownership of `words`; bits beyond `length` are cleared.
    static BitString from_words(std::size_t length, std::vector<word_type> words) {
        if (length == 0) throw error(errc::empty_input, "bit string length must be at least 1");
        words.resize(word_count(length), 0);
        BitString s;
        s.length_ = length;
        s.words_ = std::move(words);
        s.clear_tail();
        return s;
    }

    static BitString from_uint(std::uint64_t value, std::size_t length) {
        if (length == 0) throw error(errc::empty_input, "bit string length must be at least 1");
        if (length < integer_width && (value >> length) != 0) {
            throw error(errc::width_exceeded,
                        std::to_string(value) + " does not fit in " + std::to_string(length) + " bits");
        }
        BitString s(length);
        s.words_[0] = value;
        return s;
    }

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return length_; }

    /// Checked access.
    bool bit(std::size_t pos) const {
        if (pos >= length_) {
            throw error(errc::position_out_of_range,
                        "position " + std::to_string(pos) + " in a " + std::to_string(length_) + "-bit string");
        }
        return (*this)[pos];
    }

    bool operator[](std::size_t pos) const noexcept {
        return (words_[pos / word_bits] >> (pos % word_bits)) & 1U;
    }

    bool msb() const noexcept { return (*this)[length_ - 1]; }

    std::span<const word_type> words() const noexcept { return words_; }

    std::uint64_t to_uint() const {
        if (length_ > integer_width) {
            throw error(errc::width_exceeded,
                        std::to_string(length_) + "-bit string exceeds " + std::to_string(integer_width) + " bits");
        }
        return words_[0];
    }

    std::size_t popcount() const noexcept {
        std::size_t total = 0;
        for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    /// New string of length()+1 with `top` as the new most significant bit.
    BitString prepend(bool top) const {
        BitString out = from_words(length_ + 1, words_);
        if (top) out.words_[length_ / word_bits] |= word_type{1} << (length_ % word_bits);
        return out;
    }

    /// Removes the most significant bit. Requires length() >= 2.
    BitString drop_msb() const {
        if (length_ < 2) throw error(errc::empty_input, "cannot drop the only bit");
        return from_words(length_ - 1, words_);
    }

    /// Bits [lo, lo + count) as a new string.
    BitString slice(std::size_t lo, std::size_t count) const {
        if (count == 0 || lo + count > length_) {
            throw error(errc::position_out_of_range, "slice outside string");
        }
        std::vector<word_type> out(word_count(count), 0);
        const std::size_t shift = lo % word_bits;
        const std::size_t base = lo / word_bits;
        for (std::size_t i = 0; i < out.size(); ++i) {
            word_type w = base + i < words_.size() ? words_[base + i] >> shift : 0;
            if (shift != 0 && base + i + 1 < words_.size()) w |= words_[base + i + 1] << (word_bits - shift);
            out[i] = w;
        }
        return from_words(count, std::move(out));
    }

    /// `high` occupies the significant end of the result.
    static BitString concat(const BitString& high, const BitString& low) {
        const std::size_t n = high.length_ + low.length_;
        std::vector<word_type> out(word_count(n), 0);
        std::copy(low.words_.begin(), low.words_.end(), out.begin());
        const std::size_t shift = low.length_ % word_bits;
        const std::size_t base = low.length_ / word_bits;
        for (std::size_t i = 0; i < high.words_.size(); ++i) {
            out[base + i] |= high.words_[i] << shift;
            if (shift != 0 && base + i + 1 < out.size()) out[base + i + 1] |= high.words_[i] >> (word_bits - shift);
        }
        return from_words(n, std::move(out));
    }

    BitString operator~() const {
        BitString out = *this;
        for (word_type& w : out.words_) w = ~w;
        out.clear_tail();
        return out;
    }

    BitString& operator^=(const BitString& other) {
        require_same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitString operator^(BitString lhs, const BitString& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    friend bool operator==(const BitString& a, const BitString& b) noexcept {
        return a.length_ == b.length_ && a.words_ == b.words_;
    }

    /// Orders by length, then by unsigned value.
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    bool is_zero() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    static constexpr std::size_t word_count(std::size_t length) noexcept {
        return (length + word_bits - 1) / word_bits;
    }

    /// Mask of the valid bits in the top word.
    word_type top_mask() const noexcept {
        const std::size_t r = length_ % word_bits;
        return r == 0 ? ~word_type{0} : (word_type{1} << r) - 1;
    }

private:
    BitString() = default;

    void clear_tail() noexcept { words_.back() &= top_mask(); }

    void require_same_length(const BitString& other) const {
        if (other.length_ != length_) {
            throw error(errc::length_mismatch,
                        std::to_string(length_) + " vs " + std::to_string(other.length_) + " bits");
        }
    }

    std::size_t length_ = 0;
    std::vector<word_type> words_;
};

/// Maximal block of equal bits.
struct Run {
    bool parity;
    std::size_t length;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Runs listed from the most significant end toward bit 0.
using RunList = std::vector<Run>;

inline BitString from_text(std::string_view text) {
    if (text.empty()) throw error(errc::empty_input, "empty bit text");
    const std::size_t n = text.size();
    std::vector<BitString::word_type> words(BitString::word_count(n), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw error(errc::invalid_character,
                        "'" + std::string(1, c) + "' at offset " + std::to_string(i));
        }
        if (c == '1') {
            const std::size_t pos = n - 1 - i;
            words[pos / BitString::word_bits] |= BitString::word_type{1} << (pos % BitString::word_bits);
        }
    }
    return BitString::from_words(n, std::move(words));
}

inline std::string to_text(const BitString& s) {
    std::string out(s.length(), '0');
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (s[s.length() - 1 - i]) out[i] = '1';
    }
    return out;
}

inline bool bit_at(const BitString& s, std::size_t pos) { return s.bit(pos); }

inline BitString complement(const BitString& s) { return ~s; }

inline RunList runs(const BitString& s) {
    RunList out;
    std::size_t pos = s.length();
    while (pos > 0) {
        const bool parity = s[pos - 1];
        std::size_t len = 0;
        while (pos > 0 && s[pos - 1] == parity) {
            --pos;
            ++len;
        }
        out.push_back({parity, len});
    }
    return out;
}

/// Splits `s` into unary codes whose terminus has parity `terminus`.
/// Each code is one terminus bit followed (toward bit 0) by the maximal run
/// of opposite bits. The most significant bit must be a terminus.
inline std::vector<std::size_t> parse_unary_codes(const BitString& s, bool terminus) {
    if (s.msb() != terminus) {
        throw error(errc::malformed_unary,
                    "string does not begin with terminus " + std::string(terminus ? "1" : "0"));
    }
    std::vector<std::size_t> lengths;
    for (std::size_t pos = s.length(); pos-- > 0;) {
        if (s[pos] == terminus) {
            lengths.push_back(1);
        } else {
            ++lengths.back();
        }
    }
    return lengths;
}

/// Byte 0 fills the most significant eight bits, MSB first, so the bytes
/// printed in order read the same as to_text().
inline BitString file_to_bitstring(std::span<const std::uint8_t> bytes) {
    if (bytes.empty()) throw error(errc::empty_input, "empty file");
    const std::size_t n = bytes.size() * 8;
    std::vector<BitString::word_type> words(BitString::word_count(n), 0);
    for (std::size_t k = 0; k < bytes.size(); ++k) {
        const std::size_t offset = 8 * (bytes.size() - 1 - k);
        words[offset / BitString::word_bits] |= BitString::word_type{bytes[k]} << (offset % BitString::word_bits);
    }
    return BitString::from_words(n, std::move(words));
}

inline std::vector<std::uint8_t> bitstring_to_file(const BitString& s) {
    if (s.length() % 8 != 0) {
        throw error(errc::not_byte_aligned, std::to_string(s.length()) + " bits");
    }
    const std::size_t count = s.length() / 8;
    std::vector<std::uint8_t> out(count);
    const auto words = s.words();
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t offset = 8 * (count - 1 - k);
        out[k] = static_cast<std::uint8_t>(words[offset / BitString::word_bits] >> (offset % BitString::word_bits));
    }
    return out;
}

inline BitString from_hex(std::string_view hex) {
    if (hex.empty()) throw error(errc::empty_input, "empty hex text");
    if (hex.size() % 2 != 0) throw error(errc::invalid_character, "odd number of hex digits");
    auto nibble = [&](std::size_t i) -> std::uint8_t {
        const char c = hex[i];
        if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
        throw error(errc::invalid_character, "'" + std::string(1, c) + "' at offset " + std::to_string(i));
    };
    std::vector<std::uint8_t> bytes(hex.size() / 2);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        bytes[i] = static_cast<std::uint8_t>((nibble(2 * i) << 4) | nibble(2 * i + 1));
    }
    return file_to_bitstring(bytes);
}

inline std::string to_hex(const BitString& s) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : bitstring_to_file(s)) {
        out += digits[b >> 4];
        out += digits[b & 0xF];
    }
    return out;
}

}  // namespace due
