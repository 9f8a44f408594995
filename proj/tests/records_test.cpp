#include <gtest/gtest.h>

#include <string>

#include "due/goldens.hpp"
#include "due/records.hpp"

using namespace due;
using records::json;

TEST(Records, PartitionRoundTrip) {
    for (std::size_t n : {1U, 4U, 7U}) {
        for (Direction dir : {Direction::encode, Direction::decode}) {
            const auto cycles = partition(n, ParityRef{n - 1}, dir);
            const auto rec = records::make_partition_record(n, ParityRef{n - 1}, dir, cycles);
            const std::string line = records::to_json(rec).dump();
            EXPECT_EQ(line.find('\n'), std::string::npos);
            EXPECT_EQ(records::partition_from_json(json::parse(line)), rec);
        }
    }
}

TEST(Records, PartitionLayout) {
    const auto cycles = partition(2, ParityRef{0}, Direction::encode);
    const json j = records::to_json(records::make_partition_record(2, ParityRef{0}, Direction::encode, cycles));
    EXPECT_EQ(j.dump(), R"({"cycles":[[1,3,2,0]],"direction":"encode","n":2,"pref":0})");
}

TEST(Records, WideElementsAreBitText) {
    const Cycle c = cycle_of(BitString(70), ParityRef{0}, Direction::encode);
    const auto rec = records::make_partition_record(70, ParityRef{0}, Direction::encode, std::vector<Cycle>{c});
    const json j = records::to_json(rec);
    EXPECT_TRUE(j["cycles"][0][0].is_string());
    EXPECT_EQ(records::partition_from_json(json::parse(j.dump())), rec);
}

TEST(Records, OrbitRoundTrip) {
    records::OrbitRecord rec;
    rec.n = 16;
    rec.s0 = BitString::from_uint(golden::orbit_s0, 16);
    for (auto seed : golden::orbit_seeds) rec.generators.push_back({BitString::from_uint(seed, 16), ParityRef{0}, Direction::encode});
    rec.elements = cycle_on({rec.n, rec.s0, rec.generators}).elements;

    const json j = json::parse(records::to_json(rec).dump());
    EXPECT_EQ(j["s0"], 2014);
    EXPECT_EQ(j["generators"][1]["seed"], 99);
    EXPECT_EQ(j["elements"].size(), 32U);
    const records::OrbitRecord back = records::orbit_from_json(j);
    EXPECT_EQ(back.s0, rec.s0);
    EXPECT_EQ(back.elements, rec.elements);
    ASSERT_EQ(back.generators.size(), 3U);
    EXPECT_EQ(back.generators[2].seed.to_uint(), 6408U);
}

TEST(Records, SpectrumAndSums) {
    const json s = records::to_json(verify_spectrum(8, ParityRef{0}, Direction::encode));
    EXPECT_EQ(s["k"], 16);
    EXPECT_EQ(s["count"], 16);
    EXPECT_EQ(s["verified"], true);
    const json m = records::to_json(sum_identity_check(4, ParityRef{0}));
    EXPECT_EQ(m["expected"], 60);
    EXPECT_EQ(m["identity_holds"], true);
    EXPECT_EQ(m["sums"][0]["cycles"], 2);
}
