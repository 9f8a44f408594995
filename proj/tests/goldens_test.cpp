#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "due/goldens.hpp"

using namespace due;

namespace {

using V = std::vector<std::uint64_t>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Goldens, LoadSingleSection) {
    const GoldenDataset d = load_goldens("[n=4 p=0 dir=encode]\n7 12 5 15 8 3 10 0\n");
    ASSERT_EQ(d.size(), 1U);
    EXPECT_EQ(d[0].n, 4U);
    EXPECT_EQ(d[0].pref, ParityRef{0});
    EXPECT_EQ(d[0].dir, Direction::encode);
    EXPECT_EQ(d[0].cycles, (std::vector<V>{{7, 12, 5, 15, 8, 3, 10, 0}}));
}

TEST(Goldens, EmptyTextGivesEmptyDataset) {
    EXPECT_TRUE(load_goldens("").empty());
    EXPECT_TRUE(load_goldens("# only a comment\n\n").empty());
}

TEST(Goldens, ParseErrorsCarryLineNumbers) {
    auto message = [](const std::string& text) -> std::string {
        try {
            load_goldens(text);
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::parse_error);
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message("[n=4 p=0 dir=encode]\n7 12 16\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("1 2 3\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("\n[n=4 p=0 dir=sideways]\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("[n=4 p=4 dir=encode]\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("[n=4 p=0 dir=encode]\n1 x 2\n").find("line 2"), std::string::npos);
}

TEST(Goldens, SerializeRoundTrip) {
    const std::string text = serialize_goldens(table1());
    EXPECT_EQ(load_goldens(text).size(), table1().size());
    EXPECT_EQ(serialize_goldens(load_goldens(text)), text);
}

TEST(Goldens, EmbeddedTableMatchesShippedFile) {
    EXPECT_EQ(read_file(std::string(DUE_SOURCE_DIR) + "/data/table1.golden"), std::string(golden::table1_text));
}

// The printed "Number of Cycles c of k Elements" captions, per (n, p).
TEST(Goldens, TableCaptionsMatchLoadedCounts) {
    struct Caption {
        std::size_t n, p, count, k;
    };
    std::vector<Caption> captions{{1, 0, 2, 1}, {2, 0, 1, 4}, {2, 1, 2, 2}};
    for (std::size_t p = 0; p < 3; ++p) captions.push_back({3, p, 2, 4});
    captions.push_back({4, 0, 2, 8});
    for (std::size_t p = 1; p < 4; ++p) captions.push_back({4, p, 4, 4});
    for (std::size_t p = 0; p < 5; ++p) captions.push_back({5, p, 4, 8});
    for (std::size_t p = 0; p < 6; ++p) captions.push_back({6, p, 8, 8});
    for (std::size_t p = 0; p < 7; ++p) captions.push_back({7, p, 16, 8});
    captions.push_back({8, 0, 16, 16});
    for (std::size_t p = 1; p < 8; ++p) captions.push_back({8, p, 32, 8});

    ASSERT_EQ(table1().size(), captions.size());
    for (const Caption& c : captions) {
        const GoldenCycleSet set = table1_entry(c.n, ParityRef{c.p}, Direction::encode);
        EXPECT_EQ(set.cycles.size(), c.count) << "n=" << c.n << " p=" << c.p;
        for (const auto& cyc : set.cycles) EXPECT_EQ(cyc.size(), c.k);
        EXPECT_TRUE(set.complete());
    }
}

TEST(Goldens, CompareIsRotationButNotReversalInvariant) {
    const std::vector<V> golden{{1, 3, 2, 0}};
    EXPECT_TRUE(compare(std::vector<V>{{1, 3, 2, 0}}, golden).match);
    EXPECT_TRUE(compare(std::vector<V>{{3, 2, 0, 1}}, golden).match);
    const CompareReport r = compare(std::vector<V>{{0, 2, 3, 1}}, golden);
    EXPECT_FALSE(r.match);
    EXPECT_FALSE(r.first_mismatch.empty());
    EXPECT_TRUE(compare(std::vector<V>{{3, 2}, {1, 0}}, std::vector<V>{{0, 1}, {2, 3}}).match);
    EXPECT_FALSE(compare(std::vector<V>{{1, 0}}, std::vector<V>{{0, 1}, {2, 3}}).match);
}

TEST(Goldens, PartitionMatchesReferenceTableBothDirections) {
    for (const GoldenCycleSet& set : table1()) {
        for (Direction dir : {Direction::encode, Direction::decode}) {
            const auto cycles = partition(set.n, set.pref, dir);
            const CompareReport r = compare(cycles, table1_entry(set.n, set.pref, dir));
            EXPECT_TRUE(r.match) << "n=" << set.n << " p=" << set.pref.position << " " << r.first_mismatch;
        }
        // Canonical ordering reproduces the table's printed layout exactly.
        EXPECT_EQ(to_golden(set.n, set.pref, Direction::encode, partition(set.n, set.pref, Direction::encode)).cycles,
                  set.cycles)
            << "n=" << set.n << " p=" << set.pref.position;
    }
}

TEST(Goldens, ReferenceOrbitShape) {
    EXPECT_EQ(golden::orbit_elements.size(), 32U);
    EXPECT_EQ(golden::orbit_elements.back(), golden::orbit_s0);
}
