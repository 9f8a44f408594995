#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "due/altcodec.hpp"
#include "oracle.hpp"

using namespace due;

namespace {

std::string dropt_enc(const std::string& s, bool t) { return to_text(dropt_encode(from_text(s), DropTConfig{t})); }
std::string dropt_dec(const std::string& s, bool t) { return to_text(dropt_decode(from_text(s), DropTConfig{t})); }

std::vector<std::vector<std::string>> texts(const std::vector<std::vector<BitString>>& cycles) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : cycles) {
        std::vector<std::string> row;
        for (const auto& e : c) row.push_back(to_text(e));
        out.push_back(row);
    }
    return out;
}

using Cycles = std::vector<std::vector<std::string>>;

}  // namespace

TEST(DropT, EncodeExamples) {
    EXPECT_EQ(dropt_enc("011", true), "101");
    EXPECT_EQ(dropt_enc("000", true), "000");
    EXPECT_EQ(dropt_enc("001", false), "100");
}

TEST(DropT, DecodeExamples) {
    EXPECT_EQ(dropt_dec("101", true), "011");
    EXPECT_EQ(dropt_dec("000", true), "000");
    EXPECT_EQ(dropt_dec("100", false), "001");
}

TEST(DropT, Partition) {
    EXPECT_EQ(texts(dropt_partition(1, DropTConfig{false})), (Cycles{{"0"}, {"1"}}));
    EXPECT_EQ(texts(dropt_partition(2, DropTConfig{false})), (Cycles{{"00", "01", "10"}, {"11"}}));
    EXPECT_EQ(texts(dropt_partition(3, DropTConfig{false})),
              (Cycles{{"000", "011", "110"}, {"001", "100", "010"}, {"101"}, {"111"}}));
}

TEST(DropTProperty, PermutationWithExactInverse) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (bool t : {false, true}) {
            std::vector<bool> hit(std::size_t{1} << n, false);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const BitString s = BitString::from_uint(v, n);
                const BitString e = dropt_encode(s, DropTConfig{t});
                ASSERT_EQ(to_text(e), oracle::dropt_encode(to_text(s), t ? '1' : '0'));
                ASSERT_FALSE(hit[e.to_uint()]);
                hit[e.to_uint()] = true;
                ASSERT_EQ(dropt_decode(e, DropTConfig{t}), s);
                ASSERT_EQ(dropt_encode(dropt_decode(s, DropTConfig{t}), DropTConfig{t}), s);
            }
            std::uint64_t total = 0;
            for (const auto& c : dropt_partition(n, DropTConfig{t})) total += c.size();
            ASSERT_EQ(total, std::uint64_t{1} << n);
        }
    }
}

TEST(Construct, Examples) {
    EXPECT_EQ(to_text(construct(from_text("011"), false)), "10000010");
    EXPECT_EQ(to_text(construct(from_text("0"), false)), "1000");
    EXPECT_EQ(to_text(deconstruct(from_text("10000010"), false)), "011");
    EXPECT_EQ(to_text(deconstruct(from_text("1000"), false)), "0");
}

TEST(Construct, Errors) {
    auto code = [](const std::string& s) {
        try {
            deconstruct(from_text(s), false);
        } catch (const error& e) {
            return e.code();
        }
        return errc::parse_error;
    };
    EXPECT_EQ(code("1000001"), errc::malformed_construct);
    EXPECT_EQ(code("10"), errc::malformed_construct);
    EXPECT_EQ(code("10000011"), errc::malformed_construct);  // bit 0 breaks the anchor
    EXPECT_EQ(code("10101010"), errc::malformed_construct);  // halves disagree
}

// Halves recomputed by hand from the unary-code description.
TEST(Construct, HalvesMatchOracle) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const std::string s = oracle::to_bits(v, n);
            for (char anchor : {'0', '1'}) {
                const std::string zero = oracle::anchored_runs(oracle::parse_codes("0" + s, '0'), 0, anchor);
                const std::string one = oracle::anchored_runs(oracle::parse_codes("1" + s, '1'), 0, anchor);
                ASSERT_EQ(to_text(construct(from_text(s), anchor == '1')), zero + one);
                ASSERT_EQ(to_text(construct(from_text(s), anchor == '1', HalfOrder::one_high)), one + zero);
            }
        }
    }
}

TEST(ConstructProperty, RoundTripExhaustive) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const BitString s = BitString::from_uint(v, n);
            for (bool anchor : {false, true}) {
                for (HalfOrder order : {HalfOrder::zero_high, HalfOrder::one_high}) {
                    const BitString c = construct(s, anchor, order);
                    ASSERT_EQ(c.length(), 2 * (n + 1));
                    ASSERT_EQ(deconstruct(c, anchor, order), s);
                }
            }
        }
    }
}
