#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "due/bitstring.hpp"
#include "due/error.hpp"

namespace due {

/// Bit position whose parity selects the terminus when encoding and anchors
/// the run parities when decoding.
struct ParityRef {
    std::size_t position = 0;

    constexpr ParityRef() = default;
    constexpr explicit ParityRef(std::size_t pos) : position(pos) {}

    friend constexpr bool operator==(ParityRef, ParityRef) = default;
};

/// encode steps to the next element of a cycle, decode to the previous one.
enum class Direction { encode, decode };

constexpr Direction reverse(Direction d) noexcept {
    return d == Direction::encode ? Direction::decode : Direction::encode;
}

constexpr std::string_view to_string(Direction d) noexcept {
    return d == Direction::encode ? "encode" : "decode";
}

inline Direction parse_direction(std::string_view text) {
    if (text == "encode") return Direction::encode;
    if (text == "decode") return Direction::decode;
    throw error(errc::parse_error, "direction must be 'encode' or 'decode', got '" + std::string(text) + "'");
}

inline void check_pref(std::size_t length, ParityRef p) {
    if (p.position >= length) {
        throw error(errc::position_out_of_range,
                    "parity reference b" + std::to_string(p.position) + " in a " + std::to_string(length) +
                        "-bit string");
    }
}

// Single-word kernels for strings of at most 64 bits, value in the low n bits.
namespace word {

constexpr std::uint64_t mask(unsigned n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Suffix parity: bit i of the result is the XOR of bits i..63 of x.
constexpr std::uint64_t suffix_xor(std::uint64_t x) noexcept {
    x ^= x >> 1;
    x ^= x >> 2;
    x ^= x >> 4;
    x ^= x >> 8;
    x ^= x >> 16;
    x ^= x >> 32;
    return x;
}

/// Run-start marks: bit i set when bit i begins a run scanning from the top.
constexpr std::uint64_t run_starts(std::uint64_t v, unsigned n) noexcept {
    return ((v ^ (v >> 1)) | (std::uint64_t{1} << (n - 1))) & mask(n);
}

constexpr std::uint64_t unary_encode(std::uint64_t v, unsigned n, bool terminus) noexcept {
    const std::uint64_t starts = run_starts(v, n);
    return terminus ? starts : ~starts & mask(n);
}

constexpr std::uint64_t unary_decode(std::uint64_t v, unsigned n, bool terminus, unsigned anchor,
                                     bool anchor_parity) noexcept {
    const std::uint64_t starts = (terminus ? v : ~v) & mask(n - 1);
    const std::uint64_t flips = suffix_xor(starts);
    const bool top = anchor_parity ^ ((flips >> anchor) & 1U);
    return (flips ^ (top ? ~std::uint64_t{0} : 0)) & mask(n);
}

constexpr std::uint64_t encode(std::uint64_t v, unsigned n, unsigned pref) noexcept {
    return unary_encode(v, n, (v >> pref) & 1U);
}

constexpr std::uint64_t decode(std::uint64_t v, unsigned n, unsigned pref) noexcept {
    const bool t = (v >> (n - 1)) & 1U;
    return unary_decode(v, n, t, pref, t);
}

constexpr std::uint64_t step(std::uint64_t v, unsigned n, unsigned pref, Direction dir) noexcept {
    return dir == Direction::encode ? encode(v, n, pref) : decode(v, n, pref);
}

}  // namespace word

/// Rewrites every run of `s` (taken from the most significant end) as a
/// unary code of the same length: one `terminus` bit followed by length-1
/// opposite bits.
inline BitString unary_encode(const BitString& s, bool terminus) {
    const auto in = s.words();
    const std::size_t n = s.length();
    std::vector<BitString::word_type> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const BitString::word_type next = i + 1 < in.size() ? in[i + 1] : 0;
        out[i] = in[i] ^ ((in[i] >> 1) | (next << 63));
    }
    out[(n - 1) / 64] |= BitString::word_type{1} << ((n - 1) % 64);
    if (!terminus) {
        for (auto& w : out) w = ~w;
    }
    return BitString::from_words(n, std::move(out));
}

/// Inverse of unary_encode: parses codes delimited by `terminus` and writes
/// alternating runs of those lengths, choosing the phase so that bit
/// `anchor` of the result equals `anchor_parity`. The most significant bit
/// of `s` is treated as a terminus regardless of its value.
inline BitString unary_decode(const BitString& s, bool terminus, std::size_t anchor, bool anchor_parity) {
    check_pref(s.length(), ParityRef{anchor});
    const auto in = s.words();
    const std::size_t n = s.length();
    std::vector<BitString::word_type> flips(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) flips[i] = terminus ? in[i] : ~in[i];
    // Only positions below n-1 mark parity changes.
    const std::size_t top = n - 1;
    flips[top / 64] &= (BitString::word_type{1} << (top % 64)) - 1;
    for (std::size_t i = top / 64 + 1; i < flips.size(); ++i) flips[i] = 0;

    bool carry = false;
    for (std::size_t i = flips.size(); i-- > 0;) {
        BitString::word_type w = word::suffix_xor(flips[i]);
        if (carry) w = ~w;
        flips[i] = w;
        carry = w & 1U;
    }
    const bool flip_all = anchor_parity ^ static_cast<bool>((flips[anchor / 64] >> (anchor % 64)) & 1U);
    if (flip_all) {
        for (auto& w : flips) w = ~w;
    }
    return BitString::from_words(n, std::move(flips));
}

/// One encode step: the terminus parity is the bit at `p`.
inline BitString encode(const BitString& s, ParityRef p) {
    check_pref(s.length(), p);
    return unary_encode(s, s[p.position]);
}

/// One decode step: the terminus is read from the most significant bit and
/// the rebuilt string carries that parity at `p`.
inline BitString decode(const BitString& s, ParityRef p) {
    check_pref(s.length(), p);
    const bool t = s.msb();
    return unary_decode(s, t, p.position, t);
}

inline BitString transform(const BitString& s, ParityRef p, Direction dir) {
    return dir == Direction::encode ? encode(s, p) : decode(s, p);
}

inline BitString iterate(BitString s, ParityRef p, Direction dir, std::uint64_t steps) {
    check_pref(s.length(), p);
    for (std::uint64_t i = 0; i < steps; ++i) s = transform(s, p, dir);
    return s;
}

}  // namespace due
