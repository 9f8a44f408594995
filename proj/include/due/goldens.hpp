#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "due/codec.hpp"
#include "due/cycles.hpp"
#include "due/error.hpp"
#include "due/table1.hpp"

namespace due {

/// Reference cycles for one (n, p, dir), each listed in transform order.
struct GoldenCycleSet {
    std::size_t n = 0;
    ParityRef pref;
    Direction dir = Direction::encode;
    std::vector<std::vector<std::uint64_t>> cycles;

    std::uint64_t element_count() const noexcept {
        std::uint64_t total = 0;
        for (const auto& c : cycles) total += c.size();
        return total;
    }

    /// True when every n-bit value appears exactly once.
    bool complete() const {
        if (n >= 64) return false;
        std::vector<std::uint64_t> all;
        for (const auto& c : cycles) all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        if (all.size() != (std::uint64_t{1} << n)) return false;
        for (std::uint64_t i = 0; i < all.size(); ++i) {
            if (all[i] != i) return false;
        }
        return true;
    }
};

using GoldenDataset = std::vector<GoldenCycleSet>;

namespace golden {

inline constexpr std::size_t orbit_length = 16;
inline constexpr std::uint64_t orbit_s0 = 2014;
inline constexpr std::array<std::uint64_t, 3> orbit_seeds{1, 99, 6408};

/// The 16-bit Cycle-On orbit of 2014 under seeds 1, 99, 6408 at b0.
inline constexpr std::array<std::uint64_t, 32> orbit_elements{
    28158, 19761, 64921, 60058, 30232, 23332, 8057,  63754, 27712, 19536, 951,
    60323, 34882, 23123, 57674, 2015,  37376, 19760, 615,   60059, 35302, 23333,
    57479, 63755, 37822, 19537, 64585, 60322, 30652, 23122, 7860,  2014,
};

}  // namespace golden

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool parse_uint(std::string_view text, std::uint64_t& out) {
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

inline error golden_error(std::size_t line_no, const std::string& what) {
    return error(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

inline GoldenCycleSet parse_header(std::string_view line, std::size_t line_no) {
    // [n=<int> p=<int> dir=encode|decode]
    if (line.size() < 2 || line.back() != ']') throw golden_error(line_no, "unterminated section header");
    std::string_view body = line.substr(1, line.size() - 2);
    GoldenCycleSet set;
    bool have_n = false, have_p = false, have_dir = false;
    while (!body.empty()) {
        body = trim(body);
        const auto end = body.find(' ');
        const std::string_view field = body.substr(0, end);
        body = end == std::string_view::npos ? std::string_view{} : body.substr(end);
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) throw golden_error(line_no, "expected key=value in header");
        const std::string_view key = field.substr(0, eq);
        const std::string_view value = field.substr(eq + 1);
        std::uint64_t number = 0;
        if (key == "n" && parse_uint(value, number)) {
            set.n = number;
            have_n = true;
        } else if (key == "p" && parse_uint(value, number)) {
            set.pref = ParityRef{number};
            have_p = true;
        } else if (key == "dir" && (value == "encode" || value == "decode")) {
            set.dir = parse_direction(value);
            have_dir = true;
        } else {
            throw golden_error(line_no, "bad header field '" + std::string(field) + "'");
        }
    }
    if (!have_n || !have_p || !have_dir) throw golden_error(line_no, "header needs n, p and dir");
    if (set.n == 0 || set.n > 63) throw golden_error(line_no, "n must be in 1..63");
    if (set.pref.position >= set.n) throw golden_error(line_no, "p must be below n");
    return set;
}

}  // namespace detail

/// Parses the golden text format: `[n=<int> p=<int> dir=encode|decode]`
/// section headers, one cycle per line as decimal integers, `#` comments.
inline GoldenDataset load_goldens(std::string_view text) {
    GoldenDataset out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            out.push_back(detail::parse_header(line, line_no));
            continue;
        }
        if (out.empty()) throw detail::golden_error(line_no, "cycle listed before any section header");
        GoldenCycleSet& set = out.back();
        std::vector<std::uint64_t> cycle;
        while (!line.empty()) {
            const auto end = line.find_first_of(" \t");
            const std::string_view tok = line.substr(0, end);
            line = end == std::string_view::npos ? std::string_view{} : detail::trim(line.substr(end));
            std::uint64_t v = 0;
            if (!detail::parse_uint(tok, v)) {
                throw detail::golden_error(line_no, "not an integer: '" + std::string(tok) + "'");
            }
            if (v >> set.n) {
                throw detail::golden_error(line_no, std::to_string(v) + " does not fit in " + std::to_string(set.n) +
                                                        " bits");
            }
            cycle.push_back(v);
        }
        set.cycles.push_back(std::move(cycle));
    }
    return out;
}

inline std::string serialize_goldens(std::span<const GoldenCycleSet> sets) {
    std::string out;
    for (const GoldenCycleSet& set : sets) {
        if (!out.empty()) out += '\n';
        out += "[n=" + std::to_string(set.n) + " p=" + std::to_string(set.pref.position) +
               " dir=" + std::string(to_string(set.dir)) + "]\n";
        for (const auto& cycle : set.cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(cycle[i]);
            }
            out += '\n';
        }
    }
    return out;
}

/// The reference cycle table (n = 1..8, every p, encode direction).
inline const GoldenDataset& table1() {
    static const GoldenDataset data = load_goldens(golden::table1_text);
    return data;
}

/// Same cycles traversed in the decode direction.
inline GoldenCycleSet reversed(const GoldenCycleSet& set) {
    GoldenCycleSet out = set;
    out.dir = reverse(set.dir);
    for (auto& c : out.cycles) std::reverse(c.begin(), c.end());
    return out;
}

/// Golden set for (n, p, dir) from the reference table; decode sets are derived by
/// reversal. Throws parse_error when the reference table has no such entry.
inline GoldenCycleSet table1_entry(std::size_t n, ParityRef p, Direction dir) {
    for (const GoldenCycleSet& set : table1()) {
        if (set.n == n && set.pref == p) return dir == set.dir ? set : reversed(set);
    }
    throw error(errc::parse_error,
                "no reference table entry for n=" + std::to_string(n) + " p=" + std::to_string(p.position));
}

inline GoldenCycleSet to_golden(std::size_t n, ParityRef p, Direction dir, std::span<const Cycle> cycles) {
    GoldenCycleSet out{n, p, dir, {}};
    for (const Cycle& c : cycles) {
        std::vector<std::uint64_t> values;
        values.reserve(c.size());
        for (const BitString& e : c.elements) values.push_back(e.to_uint());
        out.cycles.push_back(std::move(values));
    }
    return out;
}

struct CompareReport {
    bool match = true;
    std::string first_mismatch;
};

namespace detail {

/// Rotates so the minimal element comes first; orientation is preserved.
inline std::vector<std::uint64_t> rotate_min_first(std::vector<std::uint64_t> c) {
    if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    return c;
}

inline std::string join(const std::vector<std::uint64_t>& c) {
    std::string out = "(";
    for (std::uint64_t v : c) out += " " + std::to_string(v);
    return out + " )";
}

}  // namespace detail

/// Equality up to rotation of each cycle and order of the cycle list.
/// A reversed cycle is a different cycle.
inline CompareReport compare(const std::vector<std::vector<std::uint64_t>>& computed,
                             const std::vector<std::vector<std::uint64_t>>& expected) {
    auto canon = [](const std::vector<std::vector<std::uint64_t>>& cycles) {
        std::vector<std::vector<std::uint64_t>> out;
        for (const auto& c : cycles) out.push_back(detail::rotate_min_first(c));
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto a = canon(computed);
    const auto b = canon(expected);
    CompareReport r;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        if (i >= a.size()) {
            r = {false, "missing golden cycle " + detail::join(b[i])};
            return r;
        }
        if (i >= b.size()) {
            r = {false, "unexpected computed cycle " + detail::join(a[i])};
            return r;
        }
        if (a[i] != b[i]) {
            r = {false, "computed " + detail::join(a[i]) + " vs golden " + detail::join(b[i])};
            return r;
        }
    }
    return r;
}

inline CompareReport compare(std::span<const Cycle> computed, const GoldenCycleSet& golden) {
    if (!computed.empty()) {
        const Cycle& c = computed.front();
        if (c.n != golden.n || c.pref != golden.pref || c.dir != golden.dir) {
            return {false, "configuration differs from golden set"};
        }
    }
    return compare(to_golden(golden.n, golden.pref, golden.dir, computed).cycles, golden.cycles);
}

}  // namespace due
