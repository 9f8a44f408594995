#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "due/bitstring.hpp"
#include "due/codec.hpp"
#include "due/cycles.hpp"
#include "due/error.hpp"

namespace due {

// ---------------------------------------------------------------------------
// Drop-T
// ---------------------------------------------------------------------------

struct DropTConfig {
    bool terminus = true;  // fixed for every iteration
};

/// Each iteration samples bit 0 of the working string, re-encodes the
/// working string with the fixed terminus and drops its most significant
/// bit. The first sample lands at the most significant end of the output.
inline BitString dropt_encode(const BitString& s, DropTConfig cfg) {
    const std::size_t n = s.length();
    std::vector<BitString::word_type> samples(BitString::word_count(n), 0);
    BitString work = s;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t pos = n - 1 - i;
        if (work[0]) samples[pos / 64] |= BitString::word_type{1} << (pos % 64);
        if (work.length() > 1) work = unary_encode(work, cfg.terminus).drop_msb();
    }
    return BitString::from_words(n, std::move(samples));
}

/// Starts from the last sample as a one-bit string, then repeatedly restores
/// the dropped terminus at the significant end and rebuilds the runs so that
/// bit 0 carries the next sample.
inline BitString dropt_decode(const BitString& s, DropTConfig cfg) {
    const std::size_t n = s.length();
    BitString work = BitString::from_uint(s[0] ? 1 : 0, 1);
    for (std::size_t i = 1; i < n; ++i) {
        work = unary_decode(work.prepend(cfg.terminus), cfg.terminus, 0, s[i]);
    }
    return work;
}

/// Cycles of the Drop-T permutation on n-bit strings, sorted by minimal
/// element with each cycle starting at that element.
inline std::vector<std::vector<BitString>> dropt_partition(std::size_t n, DropTConfig cfg,
                                                           const EnumerationBudget& budget = {}) {
    detail::check_budget(n, budget);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<std::vector<BitString>> out;
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        if (visited[seed]) continue;
        std::vector<BitString> cycle;
        BitString x = BitString::from_uint(seed, n);
        do {
            const std::uint64_t v = x.to_uint();
            if (visited[v]) throw error(errc::non_closure, "Drop-T is not a permutation for n=" + std::to_string(n));
            visited[v] = true;
            cycle.push_back(x);
            x = dropt_encode(x, cfg);
        } while (x.to_uint() != seed);
        out.push_back(std::move(cycle));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Construction / deconstruction
// ---------------------------------------------------------------------------

/// Which decoded half occupies the significant end of a construct.
enum class HalfOrder { zero_high, one_high };

/// Prefixes `s` with a 0 and with a 1, decodes each as unary codes whose
/// terminus is that new top bit with bit 0 forced to `anchor`, and joins the
/// two results (2(n+1) bits).
inline BitString construct(const BitString& s, bool anchor = false, HalfOrder order = HalfOrder::zero_high) {
    const BitString zero_half = unary_decode(s.prepend(false), false, 0, anchor);
    const BitString one_half = unary_decode(s.prepend(true), true, 0, anchor);
    return order == HalfOrder::zero_high ? BitString::concat(zero_half, one_half)
                                         : BitString::concat(one_half, zero_half);
}

inline BitString deconstruct(const BitString& s, bool anchor = false, HalfOrder order = HalfOrder::zero_high) {
    if (s.length() % 2 != 0 || s.length() < 4) {
        throw error(errc::malformed_construct, "length " + std::to_string(s.length()) + " is not 2(n+1) with n >= 1");
    }
    const std::size_t half = s.length() / 2;
    const BitString high = s.slice(half, half);
    const BitString low = s.slice(0, half);
    const BitString& zero_half = order == HalfOrder::zero_high ? high : low;
    const BitString& one_half = order == HalfOrder::zero_high ? low : high;
    if (zero_half[0] != anchor || one_half[0] != anchor) {
        throw error(errc::malformed_construct, "half does not carry the anchor parity at bit 0");
    }
    const BitString zero_rest = unary_encode(zero_half, false).drop_msb();
    const BitString one_rest = unary_encode(one_half, true).drop_msb();
    if (zero_rest != one_rest) {
        throw error(errc::malformed_construct, "halves encode to different remainders");
    }
    return zero_rest;
}

}  // namespace due
