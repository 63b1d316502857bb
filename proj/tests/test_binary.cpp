#include "oracles.hpp"

#include "vtcodes/analysis.hpp"
#include "vtcodes/binary.hpp"
#include "vtcodes/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace vtcodes;

namespace {

BinaryWord bw(const char *text) {
    return BinaryWord::from_string(text);
}

oracle::Bits to_bits(const BinaryWord &w) {
    return oracle::Bits(w.bits().begin(), w.bits().end());
}

BinaryWord word_from_index(std::uint64_t x, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>((x >> i) & 1U);
    }
    return BinaryWord(std::move(bits));
}

} // namespace

TEST(BinaryWord, ParsesAndFormats) {
    EXPECT_EQ(bw("0110").to_string(), "0110");
    EXPECT_EQ(bw("").size(), 0u);
    EXPECT_THROW(bw("01a"), ParameterError);
    EXPECT_THROW(BinaryWord(std::vector<std::uint8_t>{0, 2}), ParameterError);
}

TEST(BinarySyndrome, Examples) {
    EXPECT_EQ(syndrome(bw("010")), 2u);
    EXPECT_EQ(syndrome(bw("111")), 2u);
    EXPECT_EQ(syndrome(bw("011")), 1u);
    for (std::size_t n = 1; n <= 20; ++n) {
        EXPECT_EQ(syndrome(BinaryWord::zeros(n)), 0u);
    }
}

TEST(BinarySyndrome, MatchesOracle) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            const auto w = word_from_index(x, n);
            ASSERT_EQ(syndrome(w), oracle::binary_syndrome(to_bits(w)));
        }
    }
}

TEST(BinaryMembership, Examples) {
    EXPECT_TRUE(is_member(bw("010"), 2));
    EXPECT_FALSE(is_member(bw("011"), 2));
    EXPECT_TRUE(is_member(bw("0000000"), 0));
    EXPECT_THROW((void)is_member(bw("010"), 4), ParameterError);
}

TEST(BinaryParams, DerivedSizes) {
    const BinaryVtParams p(7, 0);
    EXPECT_EQ(p.parity_bits(), 3u);
    EXPECT_EQ(p.message_bits(), 4u);
    EXPECT_EQ(p.message_positions(), (std::vector<std::size_t>{3, 5, 6, 7}));
    EXPECT_EQ(BinaryVtParams(15, 0).parity_bits(), 4u);
    EXPECT_EQ(BinaryVtParams(16, 0).parity_bits(), 5u);
    EXPECT_THROW(BinaryVtParams(7, 8), ParameterError);
    EXPECT_THROW(BinaryVtParams(0, 0), ParameterError);
}

TEST(BinaryEncode, FrozenExamples) {
    EXPECT_EQ(encode_binary(bw("0000"), BinaryVtParams(7, 0)), bw("0000000"));
    EXPECT_EQ(encode_binary(bw("1000"), BinaryVtParams(7, 0)), bw("1011000"));
    EXPECT_EQ(encode_binary(bw("0000"), BinaryVtParams(7, 2)), bw("0100000"));
}

TEST(BinaryEncode, FrozenExamplesAgreeWithOracle) {
    EXPECT_EQ(oracle::binary_encode({1, 0, 0, 0}, 7, 0), (oracle::Bits{1, 0, 1, 1, 0, 0, 0}));
    EXPECT_EQ(oracle::binary_encode({0, 0, 0, 0}, 7, 2), (oracle::Bits{0, 1, 0, 0, 0, 0, 0}));
}

TEST(BinaryEncode, RejectsWrongMessageLength) {
    EXPECT_THROW((void)encode_binary(bw("000"), BinaryVtParams(7, 0)), ParameterError);
    EXPECT_THROW((void)extract_binary(bw("000000"), BinaryVtParams(7, 0)), ParameterError);
}

TEST(BinaryExtract, Examples) {
    EXPECT_EQ(extract_binary(bw("0000000"), BinaryVtParams(7, 0)), bw("0000"));
    EXPECT_EQ(extract_binary(bw("1011000"), BinaryVtParams(7, 0)), bw("1000"));
    EXPECT_EQ(extract_binary(bw("0100000"), BinaryVtParams(7, 2)), bw("0000"));
}

TEST(BinaryEncode, RoundTripInjectiveAndMatchesOracle) {
    for (std::size_t n = 4; n <= 15; ++n) {
        for (std::uint64_t a = 0; a <= n; ++a) {
            const BinaryVtParams p(n, a);
            const std::size_t k = p.message_bits();
            std::set<BinaryWord> seen;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
                const auto m = word_from_index(x, k);
                const auto c = encode_binary(m, p);
                ASSERT_EQ(syndrome(c), a);
                ASSERT_EQ(extract_binary(c, p), m);
                ASSERT_TRUE(seen.insert(c).second);
                if (n <= 10) {
                    ASSERT_EQ(to_bits(c), oracle::binary_encode(to_bits(m), n, a));
                }
            }
        }
    }
}

TEST(BinaryCode, PartitionsTheSpace) {
    for (std::size_t n = 1; n <= 14; ++n) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            const auto w = word_from_index(x, n);
            std::size_t memberships = 0;
            for (std::uint64_t a = 0; a <= n; ++a) {
                memberships += is_member(w, a) ? 1 : 0;
            }
            ASSERT_EQ(memberships, 1u);
            ++counts[syndrome(w)];
        }
        EXPECT_EQ(counts, binary_census(n));
    }
}

TEST(BinaryCorrect, Examples) {
    const BinaryVtParams p(3, 2);
    EXPECT_EQ(correct_binary(bw("11"), p), bw("111"));
    EXPECT_EQ(correct_binary(bw("01"), p), bw("010"));
    EXPECT_EQ(correct_binary(bw("010"), p), bw("010"));
    for (std::size_t n = 2; n <= 12; ++n) {
        EXPECT_EQ(correct_binary(BinaryWord::zeros(n - 1), BinaryVtParams(n, 0)), BinaryWord::zeros(n));
    }
}

TEST(BinaryCorrect, ErrorPaths) {
    const BinaryVtParams p(3, 2);
    EXPECT_THROW((void)correct_binary(bw("011"), p), NotACodeword);
    EXPECT_THROW((void)correct_binary(bw("0000"), p), NoCandidate);
    EXPECT_THROW((void)correct_binary(bw("0"), p), ParameterError);
    EXPECT_THROW((void)correct_binary(bw("00000"), p), ParameterError);
}

TEST(BinaryCorrect, EveryDeletionAndInsertionIsUndone) {
    for (std::size_t n = 1; n <= 11; ++n) {
        for (std::uint64_t a = 0; a <= n; ++a) {
            const BinaryVtParams p(n, a);
            for (const auto &c : list_binary_code(n, a)) {
                for (const auto &r : oracle::deletion_ball(to_bits(c))) {
                    const BinaryWord received(std::vector<std::uint8_t>(r.begin(), r.end()));
                    ASSERT_EQ(correct_binary(received, p), c);
                }
                for (const auto &r : oracle::insertion_ball(to_bits(c), 2)) {
                    const BinaryWord received(std::vector<std::uint8_t>(r.begin(), r.end()));
                    ASSERT_EQ(correct_binary(received, p), c);
                }
            }
        }
    }
}

TEST(BinaryCorrect, FastDeletionDecoderAgreesWithSearch) {
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::uint64_t a = 0; a <= n; ++a) {
            const BinaryVtParams p(n, a);
            for (const auto &c : list_binary_code(n, a)) {
                for (std::size_t i = 0; i < n; ++i) {
                    auto bits = to_bits(c);
                    bits.erase(bits.begin() + static_cast<std::ptrdiff_t>(i));
                    const BinaryWord received(std::vector<std::uint8_t>(bits.begin(), bits.end()));
                    ASSERT_EQ(correct_binary_deletion_fast(received, p), correct_binary(received, p));
                }
            }
        }
    }
}

TEST(SyndromePositions, Examples) {
    const std::vector<std::size_t> dyadic{1, 2, 4};
    const std::vector<std::size_t> negated{7, 6, 4};
    const std::vector<std::size_t> evens{2, 4};
    EXPECT_TRUE(validate_syndrome_positions(7, dyadic));
    EXPECT_TRUE(validate_syndrome_positions(7, negated));
    EXPECT_FALSE(validate_syndrome_positions(7, evens));
}

TEST(SyndromePositions, NegatedDyadicSetsWork) {
    // i_j = -2^j mod (n + 1)
    for (std::size_t n = 3; n <= 64; ++n) {
        std::vector<std::size_t> positions;
        for (std::size_t j = 0; j < binary_parity_bits(n); ++j) {
            positions.push_back((n + 1 - ((std::size_t{1} << j) % (n + 1))) % (n + 1));
        }
        if (std::find(positions.begin(), positions.end(), 0) != positions.end() ||
            std::set<std::size_t>(positions.begin(), positions.end()).size() != positions.size()) {
            continue;
        }
        EXPECT_TRUE(validate_syndrome_positions(n, positions)) << "n = " << n;
    }
}

TEST(SyndromePositions, DyadicSetAlwaysValid) {
    for (std::size_t n = 1; n <= 64; ++n) {
        std::vector<std::size_t> positions;
        for (std::size_t p = 1; p <= n; p *= 2) {
            positions.push_back(p);
        }
        EXPECT_TRUE(validate_syndrome_positions(n, positions)) << "n = " << n;
    }
}

TEST(SyndromePositions, MatchesSubsetEnumeration) {
    for (std::size_t n = 3; n <= 9; ++n) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::size_t> positions;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1U) {
                    positions.push_back(i + 1);
                }
            }
            std::set<std::size_t> sums;
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << positions.size()); ++sub) {
                std::size_t s = 0;
                for (std::size_t i = 0; i < positions.size(); ++i) {
                    if ((sub >> i) & 1U) {
                        s += positions[i];
                    }
                }
                sums.insert(s % (n + 1));
            }
            ASSERT_EQ(validate_syndrome_positions(n, positions), sums.size() == n + 1);
        }
    }
}

TEST(SyndromePositions, RejectsBadInput) {
    const std::vector<std::size_t> empty;
    const std::vector<std::size_t> zero{0, 1};
    const std::vector<std::size_t> high{1, 8};
    const std::vector<std::size_t> dup{1, 2, 2, 4};
    EXPECT_THROW((void)validate_syndrome_positions(7, empty), ParameterError);
    EXPECT_THROW((void)validate_syndrome_positions(7, zero), ParameterError);
    EXPECT_THROW((void)validate_syndrome_positions(7, high), ParameterError);
    EXPECT_THROW((void)validate_syndrome_positions(7, dup), ParameterError);
}
