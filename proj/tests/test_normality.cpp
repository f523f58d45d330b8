#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <pnlab/normality.hpp>
#include <pnlab/oracle.hpp>

#include "support.hpp"

using namespace pnlab;
using pnlab::testing::w;

TEST(Normality, Examples) {
    EXPECT_TRUE(is_prefix_normal(w("110101")));
    EXPECT_FALSE(is_prefix_normal(w("101101")));
    EXPECT_TRUE(is_prefix_normal(w("0000")));
    EXPECT_TRUE(is_suffix_normal(w("101011")));
    EXPECT_FALSE(is_suffix_normal(w("110101")));
    EXPECT_TRUE(is_suffix_normal(w("1111")));
    EXPECT_TRUE(is_least_representative(w("")));
}

TEST(Normality, ReversalSwapsPrefixAndSuffix) {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            EXPECT_EQ(is_prefix_normal(v), is_suffix_normal(reverse(v))) << v.to_string();
        }
    }
}

TEST(CanonicalForms, Examples) {
    EXPECT_EQ(prefix_normal_form(w("101101")), w("110101"));
    EXPECT_EQ(prefix_normal_form(w("110101")), w("110101"));
    EXPECT_EQ(prefix_normal_form(w("0011")), w("1100"));
    EXPECT_EQ(least_representative(w("110101")), w("101011"));
    EXPECT_EQ(least_representative(w("000000")), w("000000"));
    // f_1001 = 1,1,1,2 and 1001 is a prefix normal palindrome
    EXPECT_EQ(max_ones(w("1001")), pnlab::testing::fn("1,1,1,2"));
    EXPECT_EQ(least_representative(w("1001")), w("1001"));
    EXPECT_EQ(prefix_normal_form(w("1001")), w("1001"));
    EXPECT_EQ(pnlab::testing::texts(class_members(w("1001"))), std::vector<std::string>{"1001"});
}

TEST(PnEquivalent, Examples) {
    EXPECT_TRUE(pn_equivalent(w("110101"), w("101101")));
    EXPECT_TRUE(pn_equivalent(w("0110"), w("0110")));
    EXPECT_TRUE(pn_equivalent(w("10"), w("01")));
    EXPECT_FALSE(pn_equivalent(w("0011"), w("0101")));
    EXPECT_THROW(pn_equivalent(w("10"), w("100")), precondition_error);
}

TEST(ClassMembers, Examples) {
    EXPECT_EQ(pnlab::testing::texts(class_members(w("10101"))), std::vector<std::string>{"10101"});
    const auto members = class_members(w("110101"));
    ASSERT_GE(members.size(), 2u);
    EXPECT_EQ(members.front(), w("101011"));
    EXPECT_EQ(members.back(), w("110101"));
    EXPECT_EQ(pnlab::testing::texts(class_members(w("00000"))), std::vector<std::string>{"00000"});
}

TEST(EnumerateLeastRepresentatives, Counts) {
    const std::size_t expected[] = {1, 2, 3, 5, 8, 14, 23, 41, 70, 125, 218, 395, 697, 1273, 2279};
    for (std::size_t n = 0; n < std::size(expected); ++n) {
        EXPECT_EQ(enumerate_least_representatives(n).size(), expected[n]) << n;
    }
}

TEST(EnumerateLeastRepresentatives, SortedSuffixNormalAndComplete) {
    for (std::size_t n = 0; n <= 14; ++n) {
        const auto lrs = enumerate_least_representatives(n);
        EXPECT_TRUE(std::is_sorted(lrs.begin(), lrs.end()));
        EXPECT_EQ(std::adjacent_find(lrs.begin(), lrs.end()), lrs.end());
        for (const auto& v : lrs) EXPECT_TRUE(is_suffix_normal(v));
        EXPECT_EQ(lrs, oracle::brute_least_representatives(n)) << n;
    }
}

TEST(EnumerateLeastRepresentatives, IndependentOfWorkerCount) {
    for (unsigned jobs : {2u, 3u, 8u}) {
        EXPECT_EQ(enumerate_least_representatives(18, {jobs, {}}), enumerate_least_representatives(18));
    }
}

TEST(EnumeratePrefixNormalWords, ReversalsOfLeastRepresentatives) {
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto npfs = enumerate_prefix_normal_words(n);
        EXPECT_TRUE(std::is_sorted(npfs.begin(), npfs.end()));
        for (const auto& v : npfs) EXPECT_TRUE(is_prefix_normal(v));
        std::set<binary_word> reversed;
        for (const auto& v : enumerate_least_representatives(n)) reversed.insert(reverse(v));
        EXPECT_EQ(std::set<binary_word>(npfs.begin(), npfs.end()), reversed);
    }
}

TEST(EnumerateLeastRepresentatives, LimitIsEnforced) {
    run_options options;
    options.limits.enumeration = 10;
    EXPECT_THROW(enumerate_least_representatives(11, options), limit_exceeded);
}

TEST(ClassPartition, Counts) {
    EXPECT_EQ(class_partition(1).index(), 2u);
    EXPECT_EQ(class_partition(4).index(), 8u);
    EXPECT_EQ(class_partition(6).index(), 23u);
    EXPECT_EQ(class_partition(0).index(), 1u);
}

TEST(ClassPartition, CanonicalFormsOfEveryClass) {
    for (std::size_t n = 0; n <= 14; ++n) {
        const auto partition = class_partition(n, true);
        std::uint64_t total = 0;
        for (const auto& [signature, c] : partition.classes) {
            total += c.size;
            ASSERT_EQ(c.members.size(), c.size);
            EXPECT_EQ(c.npf, *std::max_element(c.members.begin(), c.members.end()));
            EXPECT_EQ(c.lr, *std::min_element(c.members.begin(), c.members.end()));
            EXPECT_EQ(c.lr, reverse(c.npf));
            EXPECT_EQ(std::count_if(c.members.begin(), c.members.end(), is_prefix_normal), 1);
            EXPECT_EQ(std::count_if(c.members.begin(), c.members.end(), is_suffix_normal), 1);
            EXPECT_EQ(max_ones(c.lr), signature);
        }
        EXPECT_EQ(total, std::uint64_t{1} << n);
    }
}

TEST(ClassPartition, IndependentOfWorkerCount) {
    const auto serial = class_partition(14, true);
    const auto parallel = class_partition(14, true, {8, {}});
    ASSERT_EQ(serial.index(), parallel.index());
    for (const auto& [signature, c] : serial.classes) {
        const auto& other = parallel.classes.at(signature);
        EXPECT_EQ(c.members, other.members);
        EXPECT_EQ(c.size, other.size);
    }
}
