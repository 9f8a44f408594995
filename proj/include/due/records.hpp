#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "due/bitstring.hpp"
#include "due/codec.hpp"
#include "due/cycle_on.hpp"
#include "due/cycles.hpp"
#include "due/error.hpp"

// One JSON object per record. Elements are integers for n <= 64 and bit
// text beyond.
namespace due::records {

using json = nlohmann::json;

inline json element(const BitString& s) {
    if (s.length() <= BitString::integer_width) return s.to_uint();
    return to_text(s);
}

inline BitString element_from(const json& j, std::size_t n) {
    if (j.is_string()) {
        BitString s = from_text(j.get<std::string>());
        if (s.length() != n) throw error(errc::length_mismatch, "record element length");
        return s;
    }
    return BitString::from_uint(j.get<std::uint64_t>(), n);
}

struct PartitionRecord {
    std::size_t n = 0;
    ParityRef pref;
    Direction dir = Direction::encode;
    std::vector<std::vector<BitString>> cycles;

    friend bool operator==(const PartitionRecord&, const PartitionRecord&) = default;
};

inline PartitionRecord make_partition_record(std::size_t n, ParityRef p, Direction dir, std::span<const Cycle> cycles) {
    PartitionRecord r{n, p, dir, {}};
    for (const Cycle& c : cycles) r.cycles.push_back(c.elements);
    return r;
}

inline json to_json(const PartitionRecord& r) {
    json cycles = json::array();
    for (const auto& c : r.cycles) {
        json values = json::array();
        for (const BitString& e : c) values.push_back(element(e));
        cycles.push_back(std::move(values));
    }
    return {{"n", r.n}, {"pref", r.pref.position}, {"direction", to_string(r.dir)}, {"cycles", std::move(cycles)}};
}

inline PartitionRecord partition_from_json(const json& j) {
    PartitionRecord r;
    r.n = j.at("n").get<std::size_t>();
    r.pref = ParityRef{j.at("pref").get<std::size_t>()};
    r.dir = parse_direction(j.at("direction").get<std::string>());
    for (const json& c : j.at("cycles")) {
        std::vector<BitString> elements;
        for (const json& e : c) elements.push_back(element_from(e, r.n));
        r.cycles.push_back(std::move(elements));
    }
    return r;
}

struct OrbitRecord {
    std::size_t n = 0;
    BitString s0{1};
    std::vector<Generator> generators;
    std::vector<BitString> elements;
};

inline json to_json(const OrbitRecord& r) {
    json gens = json::array();
    for (const Generator& g : r.generators) {
        gens.push_back({{"seed", element(g.seed)}, {"pref", g.pref.position}, {"dir", to_string(g.dir)}});
    }
    json elements = json::array();
    for (const BitString& e : r.elements) elements.push_back(element(e));
    return {{"n", r.n}, {"s0", element(r.s0)}, {"generators", std::move(gens)}, {"elements", std::move(elements)}};
}

inline OrbitRecord orbit_from_json(const json& j) {
    OrbitRecord r;
    r.n = j.at("n").get<std::size_t>();
    r.s0 = element_from(j.at("s0"), r.n);
    for (const json& g : j.at("generators")) {
        r.generators.push_back({element_from(g.at("seed"), r.n), ParityRef{g.at("pref").get<std::size_t>()},
                                parse_direction(g.at("dir").get<std::string>())});
    }
    for (const json& e : j.at("elements")) r.elements.push_back(element_from(e, r.n));
    return r;
}

inline json to_json(const SpectrumReport& r) {
    json findings = json::array();
    for (const auto& f : r.findings) findings.push_back(f);
    json histogram = json::object();
    for (const auto& [len, cnt] : r.length_histogram) histogram[std::to_string(len)] = cnt;
    return {{"n", r.predicted.n},
            {"pref", r.predicted.pref.position},
            {"direction", to_string(r.predicted.dir)},
            {"k", r.predicted.k},
            {"count", r.predicted.count},
            {"rule_k", r.rule_k},
            {"verified", r.pass()},
            {"histogram", std::move(histogram)},
            {"findings", std::move(findings)}};
}

inline json to_json(const SpectrumRecord& r) {
    return {{"n", r.n}, {"pref", r.pref.position}, {"direction", to_string(r.dir)}, {"k", r.k}, {"count", r.count}};
}

inline json to_json(const SumReport& r) {
    json sums = json::array();
    for (const auto& [sum, cnt] : r.sums) sums.push_back({{"sum", sum}, {"cycles", cnt}});
    json out = {{"n", r.n}, {"pref", r.pref.position}, {"direction", "encode"}, {"sums", std::move(sums)}};
    out["expected"] = r.expected ? json(*r.expected) : json(nullptr);
    out["identity_holds"] = r.identity_holds();
    return out;
}

}  // namespace due::records
