#include <gtest/gtest.h>

#include <pnlab/ones.hpp>

#include "support.hpp"

using namespace pnlab;
using pnlab::testing::fn;
using pnlab::testing::w;

TEST(MaxOnes, Examples) {
    EXPECT_EQ(max_ones(w("11011")), fn("1,2,2,3,4"));
    EXPECT_EQ(max_ones(w("101101")), fn("1,2,2,3,3,4"));
    EXPECT_EQ(max_ones(w("0000")), fn("0,0,0,0"));
    EXPECT_EQ(max_ones(w("11011"))(0), 0);
    EXPECT_EQ(max_ones(w("")).size(), 0u);
}

TEST(MaxOnes, FullLengthWords) {
    const binary_word all(~std::uint64_t{0}, 64);
    EXPECT_EQ(max_ones(all)(64), 64);
    EXPECT_EQ(max_ones(all)(17), 17);
    const binary_word alternating(0xAAAAAAAAAAAAAAAAULL, 64);
    EXPECT_EQ(max_ones(alternating)(3), 2);
    EXPECT_EQ(max_ones(alternating)(64), 32);
}

TEST(PrefixSuffixOnes, Examples) {
    EXPECT_EQ(prefix_ones(w("101101")), fn("1,1,2,3,3,4"));
    EXPECT_EQ(prefix_ones(w("1111")), fn("1,2,3,4"));
    // 101101 is a palindrome, so its suffix counts equal its prefix counts
    EXPECT_EQ(suffix_ones(w("101101")), fn("1,1,2,3,3,4"));
    EXPECT_EQ(suffix_ones(w("0011")), fn("1,2,2,2"));
}

TEST(ReverseProgress, Examples) {
    const ones_function bar = reverse_progress(fn("1,2,2,3,4"));
    EXPECT_EQ(bar(0), 4);
    EXPECT_EQ(bar.to_string(), "4,3,2,2,1");
    EXPECT_EQ(reverse_progress(fn("1,2,2,3,3,4")).to_string(), "4,3,2,2,1,1");
    const ones_function zero = reverse_progress(fn("0,0,0,0"));
    EXPECT_EQ(zero(0), 0);
    EXPECT_EQ(zero, fn("0,0,0,0"));
}

TEST(ReverseProgress, StartsAtTotalAndDropsByIncrements) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            const ones_function f = max_ones(v);
            const ones_function bar = reverse_progress(f);
            EXPECT_EQ(bar(0), f(n));
            for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(bar(k), f(n) - f(k - 1));
        }
    }
}

TEST(Sigma, Examples) {
    EXPECT_EQ(sigma(max_ones(w("11011"))), 12);
    EXPECT_EQ(sigma(max_ones(w("00000"))), 0);
    EXPECT_EQ(sigma(max_ones(w("111"))), 6);
}

TEST(OnesFunction, UnitStepAndRangeOnAllShortWords) {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            for (const auto& f : {max_ones(v), prefix_ones(v), suffix_ones(v)}) {
                ASSERT_TRUE(f.is_unit_step()) << v.to_string();
                EXPECT_EQ(f(0), 0);
                for (std::size_t k = 1; k <= n; ++k) {
                    EXPECT_LE(f(k), static_cast<int>(k));
                    EXPECT_GE(f(k), 0);
                }
            }
        }
    }
}

TEST(OnesFunction, MaximumDominatesPrefixAndSuffix) {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            const ones_function f = max_ones(v);
            const ones_function p = prefix_ones(v);
            const ones_function s = suffix_ones(v);
            for (std::size_t k = 1; k <= n; ++k) {
                EXPECT_GE(f(k), p(k));
                EXPECT_GE(f(k), s(k));
            }
            EXPECT_EQ(suffix_ones(reverse(v)), p);
        }
    }
}

TEST(OnesFunction, TextRoundTrip) {
    const ones_function f = fn("1,2,2,3");
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.to_string(), "1,2,2,3");
    EXPECT_EQ(fn("").size(), 0u);
    EXPECT_EQ(f.reversed(), fn("3,2,2,1"));
    EXPECT_EQ(f.values(), (std::vector<int>{1, 2, 2, 3}));
    EXPECT_THROW(fn("1,,2"), parse_error);
    EXPECT_THROW(fn("1,2,"), parse_error);
    EXPECT_THROW(fn("1;2"), parse_error);
}

TEST(WordFromProfile, InvertsPrefixAndSuffixCounts) {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            EXPECT_EQ(word_from_prefix_profile(prefix_ones(v)), v);
            EXPECT_EQ(word_from_suffix_profile(suffix_ones(v)), v);
        }
    }
    EXPECT_THROW(word_from_prefix_profile(fn("1,3")), precondition_error);
}
