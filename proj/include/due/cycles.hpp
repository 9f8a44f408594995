#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "due/bitstring.hpp"
#include "due/codec.hpp"
#include "due/error.hpp"

namespace due {

/// Orbit of one element under repeated encode (or decode) with a fixed
/// parity reference. elements[i+1] is the transform of elements[i] and the
/// transform of the last element is elements[0].
struct Cycle {
    std::size_t n = 0;
    ParityRef pref;
    Direction dir = Direction::encode;
    std::vector<BitString> elements;

    std::size_t size() const noexcept { return elements.size(); }

    /// The orbit as the transform visits it from elements[0]: starts at the
    /// successor of elements[0] and ends with elements[0] itself.
    std::vector<BitString> successors() const {
        std::vector<BitString> out(elements.begin() + 1, elements.end());
        out.push_back(elements.front());
        return out;
    }
};

/// Largest length that partition-style enumeration will visit.
struct EnumerationBudget {
    std::size_t max_length = 24;
};

struct SpectrumRecord {
    std::size_t n = 0;
    ParityRef pref;
    Direction dir = Direction::encode;
    std::uint64_t k = 0;      // elements per cycle
    std::uint64_t count = 0;  // number of cycles, 2^n / k
};

inline Cycle cycle_of(const BitString& seed, ParityRef p, Direction dir) {
    check_pref(seed.length(), p);
    Cycle c{seed.length(), p, dir, {seed}};
    for (BitString x = transform(seed, p, dir); x != seed; x = transform(x, p, dir)) {
        c.elements.push_back(x);
    }
    return c;
}

namespace detail {

inline void check_budget(std::size_t n, const EnumerationBudget& budget) {
    if (n == 0) throw error(errc::empty_input, "length must be at least 1");
    const std::size_t limit = std::min<std::size_t>(budget.max_length, 40);
    if (n > limit) {
        throw error(errc::budget_exceeded,
                    "n=" + std::to_string(n) + " exceeds enumeration budget of " + std::to_string(limit));
    }
}

/// Visits every cycle of the (n, p, dir) permutation in canonical order:
/// by increasing minimal element, each cycle listed so that its minimal
/// element comes last. `fn` receives the cycle values. Returns false if the
/// map turned out not to be a permutation (an element was reached twice).
template <typename Fn>
bool for_each_cycle(std::size_t n, ParityRef p, Direction dir, const EnumerationBudget& budget, Fn&& fn) {
    check_budget(n, budget);
    check_pref(n, p);
    const auto width = static_cast<unsigned>(n);
    const auto pos = static_cast<unsigned>(p.position);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<std::uint64_t> values;
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        if (visited[seed]) continue;
        values.clear();
        std::uint64_t x = seed;
        do {
            x = word::step(x, width, pos, dir);
            if (visited[x]) return false;
            visited[x] = true;
            values.push_back(x);
        } while (x != seed);
        fn(std::span<const std::uint64_t>(values));
    }
    return true;
}

inline bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

}  // namespace detail

/// All cycles of the (n, p, dir) permutation in canonical order.
inline std::vector<Cycle> partition(std::size_t n, ParityRef p, Direction dir, const EnumerationBudget& budget = {}) {
    std::vector<Cycle> out;
    const bool ok = detail::for_each_cycle(n, p, dir, budget, [&](std::span<const std::uint64_t> values) {
        Cycle c{n, p, dir, {}};
        c.elements.reserve(values.size());
        for (std::uint64_t v : values) c.elements.push_back(BitString::from_uint(v, n));
        out.push_back(std::move(c));
    });
    if (!ok) throw error(errc::non_closure, "transform is not a permutation for n=" + std::to_string(n));
    return out;
}

/// Cycle length the transform produces for (n, p), matching the reference table:
/// 1 for n=1; 2n for power-of-two n with p=0; otherwise the smallest power
/// of two not below n.
inline std::uint64_t predicted_cycle_length(std::size_t n, ParityRef p) {
    if (n == 0) throw error(errc::empty_input, "length must be at least 1");
    if (n == 1) return 1;
    if (detail::is_power_of_two(n) && p.position == 0) return 2 * static_cast<std::uint64_t>(n);
    return std::bit_ceil(static_cast<std::uint64_t>(n));
}

/// Predicted k and cycle count 2^n / k. The count must fit in 64 bits.
inline SpectrumRecord predicted_spectrum(std::size_t n, ParityRef p, Direction dir = Direction::encode) {
    const std::uint64_t k = predicted_cycle_length(n, p);
    const auto k_log2 = static_cast<std::size_t>(std::countr_zero(k));
    if (n - k_log2 >= 64) {
        throw error(errc::width_exceeded, "cycle count for n=" + std::to_string(n) + " exceeds 64 bits");
    }
    return {n, p, dir, k, std::uint64_t{1} << (n - k_log2)};
}

/// Element count per cycle from the three-category rule
/// (2^(1+floor(log2 n)) outside the n=1 and power-of-two/b0 cases). It
/// disagrees with the data for power-of-two n at p>0.
inline std::uint64_t floor_log2_rule_k(std::size_t n, ParityRef p) {
    if (n == 1) return 1;
    if (detail::is_power_of_two(n) && p.position == 0) return 2 * static_cast<std::uint64_t>(n);
    return std::uint64_t{2} << (std::bit_width(n) - 1);
}

struct SpectrumReport {
    SpectrumRecord predicted;
    std::map<std::uint64_t, std::uint64_t> length_histogram;  // cycle length -> number of cycles
    bool permutation = true;
    bool covered = true;
    bool uniform = true;
    bool matches_prediction = true;
    std::uint64_t rule_k = 0;
    std::vector<std::string> findings;

    bool pass() const noexcept { return permutation && covered && uniform && matches_prediction; }

    std::uint64_t measured_k() const noexcept {
        return length_histogram.size() == 1 ? length_histogram.begin()->first : 0;
    }
    std::uint64_t measured_count() const noexcept {
        return length_histogram.size() == 1 ? length_histogram.begin()->second : 0;
    }
};

inline SpectrumReport verify_spectrum(std::size_t n, ParityRef p, Direction dir, const EnumerationBudget& budget = {}) {
    SpectrumReport r;
    r.predicted = predicted_spectrum(n, p, dir);
    r.rule_k = floor_log2_rule_k(n, p);
    std::uint64_t seen = 0;
    r.permutation = detail::for_each_cycle(n, p, dir, budget, [&](std::span<const std::uint64_t> values) {
        ++r.length_histogram[values.size()];
        seen += values.size();
    });
    if (!r.permutation) r.findings.push_back("transform maps two elements to the same image");
    r.covered = r.permutation && seen == (std::uint64_t{1} << n);
    if (!r.covered) r.findings.push_back("cycles do not cover all 2^n elements exactly once");
    r.uniform = r.length_histogram.size() == 1;
    if (!r.uniform) {
        std::string lengths;
        for (const auto& [len, cnt] : r.length_histogram) lengths += " " + std::to_string(cnt) + "x" + std::to_string(len);
        r.findings.push_back("cycle lengths are not uniform:" + lengths);
    }
    r.matches_prediction = r.uniform && r.measured_k() == r.predicted.k && r.measured_count() == r.predicted.count;
    if (r.uniform && !r.matches_prediction) {
        r.findings.push_back("measured k=" + std::to_string(r.measured_k()) + " but predicted k=" +
                             std::to_string(r.predicted.k));
    }
    if (r.rule_k != r.predicted.k) {
        r.findings.push_back("note: rule 2^(1+floor(log2 n)) gives k=" + std::to_string(r.rule_k) +
                             "; data gives k=" + std::to_string(r.predicted.k));
    }
    return r;
}

/// Sum of the elements read as unsigned integers.
inline std::uint64_t cycle_sum(const Cycle& c) {
    std::uint64_t total = 0;
    for (const BitString& e : c.elements) {
        if (__builtin_add_overflow(total, e.to_uint(), &total)) {
            throw error(errc::width_exceeded, "cycle sum overflows 64 bits");
        }
    }
    return total;
}

inline BitString cycle_xor(const Cycle& c) {
    BitString acc(c.n);
    for (const BitString& e : c.elements) acc ^= e;
    return acc;
}

/// Closed-form cycle sum when (n, p) belongs to one of the constant-sum
/// families: n a power of two >= 2 at b0 gives (2^n - 1) n, and n = 2^m + 1
/// (m >= 1) at b1 gives (2^n - 1)(n - 1).
inline std::optional<std::uint64_t> closed_form_cycle_sum(std::size_t n, ParityRef p) {
    if (n < 2 || n >= 64) return std::nullopt;
    const std::uint64_t span = (std::uint64_t{1} << n) - 1;
    if (p.position == 0 && detail::is_power_of_two(n)) return span * n;
    if (p.position == 1 && n >= 3 && detail::is_power_of_two(n - 1)) return span * (n - 1);
    return std::nullopt;
}

struct SumReport {
    std::size_t n = 0;
    ParityRef pref;
    std::optional<std::uint64_t> expected;          // set only for the constant-sum families
    std::map<std::uint64_t, std::uint64_t> sums;    // distinct sum -> number of cycles

    bool identity_holds() const noexcept {
        return expected && sums.size() == 1 && sums.begin()->first == *expected;
    }
    bool pass() const noexcept { return !expected || identity_holds(); }
};

inline SumReport sum_identity_check(std::size_t n, ParityRef p, const EnumerationBudget& budget = {}) {
    SumReport r{n, p, closed_form_cycle_sum(n, p), {}};
    const bool ok = detail::for_each_cycle(n, p, Direction::encode, budget, [&](std::span<const std::uint64_t> values) {
        std::uint64_t total = 0;
        for (std::uint64_t v : values) total += v;
        ++r.sums[total];
    });
    if (!ok) throw error(errc::non_closure, "transform is not a permutation for n=" + std::to_string(n));
    return r;
}

/// Integer form for n <= 64, bit text beyond.
inline std::string format_element(const BitString& s) {
    return s.length() <= BitString::integer_width ? std::to_string(s.to_uint()) : to_text(s);
}

inline std::string format_elements(std::span<const BitString> elements) {
    std::string out;
    for (const BitString& e : elements) {
        if (!out.empty()) out += ' ';
        out += format_element(e);
    }
    return out;
}

}  // namespace due
