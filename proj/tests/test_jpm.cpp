#include <gtest/gtest.h>

#include <random>

#include <pnlab/jpm.hpp>
#include <pnlab/oracle.hpp>

#include "support.hpp"

using namespace pnlab;
using pnlab::testing::w;

TEST(BuildIndex, Examples) {
    const auto idx = build_index(w("110101"));
    EXPECT_EQ(idx.fmax(3), 2);
    EXPECT_EQ(idx.fmin(3), 1);
    const auto zeros = build_index(w("00000"));
    EXPECT_EQ(zeros.fmax, zeros.fmin);
    EXPECT_EQ(zeros.fmax(5), 0);
    const auto ones = build_index(w("1111"));
    for (std::size_t k = 0; k <= 4; ++k) {
        EXPECT_EQ(ones.fmax(k), static_cast<int>(k));
        EXPECT_EQ(ones.fmin(k), static_cast<int>(k));
    }
}

TEST(BuildIndex, Invariants) {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            const auto idx = build_index(v);
            EXPECT_TRUE(idx.fmax.is_unit_step());
            EXPECT_TRUE(idx.fmin.is_unit_step());
            for (std::size_t k = 0; k <= n; ++k) EXPECT_LE(idx.fmin(k), idx.fmax(k));
            EXPECT_EQ(idx.fmin(n), v.count_ones());
            EXPECT_EQ(idx.fmax(n), v.count_ones());
        }
    }
}

TEST(Query, Examples) {
    const auto idx = build_index(w("110101"));
    EXPECT_TRUE(query(idx, 2, 2));
    EXPECT_FALSE(query(idx, 3, 0));
    EXPECT_FALSE(query(idx, 2, 3));
    EXPECT_TRUE(query(idx, 0, 0));
    EXPECT_FALSE(query(idx, 0, 1));
    EXPECT_THROW(query(idx, 7, 1), precondition_error);
}

TEST(Query, MatchesOracleExhaustively) {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            const auto idx = build_index(v);
            for (std::size_t k = 0; k <= n; ++k) {
                for (int d = -1; d <= static_cast<int>(k) + 1; ++d) {
                    ASSERT_EQ(query(idx, k, d), oracle::brute_jumbled_query(v, k, d)) << v.to_string();
                }
            }
        }
    }
}

TEST(Query, MatchesOracleOnRandomLongWords) {
    std::mt19937_64 rng(20260114);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 33 + rng() % 32;
        const binary_word v(rng() & binary_word::mask(n), n);
        const auto idx = build_index(v);
        for (std::size_t k = 0; k <= n; ++k) {
            for (int d = 0; d <= static_cast<int>(k); ++d) {
                ASSERT_EQ(query(idx, k, d), oracle::brute_jumbled_query(v, k, d)) << v.to_string();
            }
        }
    }
}
