#include <gtest/gtest.h>

#include <pnlab/word.hpp>

#include "support.hpp"

using namespace pnlab;
using pnlab::testing::w;

TEST(ParseWord, LettersInOrder) {
    const binary_word v = w("110101");
    ASSERT_EQ(v.size(), 6u);
    const int expected[] = {1, 1, 0, 1, 0, 1};
    for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(v[i], expected[i - 1]) << i;
    EXPECT_EQ(v.to_string(), "110101");
}

TEST(ParseWord, Empty) {
    const binary_word e = w("");
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(e, binary_word{});
}

TEST(ParseWord, ReportsPositionOfBadCharacter) {
    try {
        parse_word("2");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 1u);
    }
    try {
        parse_word("0110x1");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(ParseWord, RejectsMoreThan64Letters) {
    EXPECT_NO_THROW(parse_word(std::string(64, '1')));
    EXPECT_THROW(parse_word(std::string(65, '0')), parse_error);
}

TEST(Reverse, Examples) {
    EXPECT_EQ(reverse(w("1101")), w("1011"));
    EXPECT_EQ(reverse(w("10101")), w("10101"));
    EXPECT_EQ(reverse(w("0011")), w("1100"));
    EXPECT_EQ(reverse(w("")), w(""));
    const binary_word full(0x8000000000000003ULL, 64);
    EXPECT_EQ(reverse(full), binary_word(0xC000000000000001ULL, 64));
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(w("110101")), w("001010"));
    EXPECT_EQ(complement(w("0000")), w("1111"));
    EXPECT_EQ(complement(w("")), w(""));
}

TEST(Word, InvolutionsOnAllShortWords) {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& v : pnlab::testing::all_words(n)) {
            EXPECT_EQ(reverse(reverse(v)), v);
            EXPECT_EQ(complement(complement(v)), v);
            EXPECT_EQ(reverse(v).count_ones(), v.count_ones());
        }
    }
}

TEST(Word, Counts) {
    const binary_word v = w("1011001");
    EXPECT_EQ(v.count_ones(), 4);
    EXPECT_EQ(v.prefix_count(0), 0);
    EXPECT_EQ(v.prefix_count(3), 2);
    EXPECT_EQ(v.suffix_count(3), 1);
    EXPECT_EQ(v.suffix_count(7), 4);
    EXPECT_EQ(v.factor_count(3, 3), 2);
    EXPECT_EQ(v.factor_count(5, 2), 0);
}

TEST(Word, FactorsAndConcatenation) {
    const binary_word v = w("1011001");
    EXPECT_EQ(v.factor(2, 4), w("011"));
    EXPECT_EQ(v.factor(4, 3), w(""));
    EXPECT_EQ(v.prefix(2), w("10"));
    EXPECT_EQ(v.suffix(3), w("001"));
    EXPECT_EQ(v.prepend(1), w("11011001"));
    EXPECT_EQ(v.append(0), w("10110010"));
    EXPECT_EQ(w("10") + w("011"), w("10011"));
    EXPECT_THROW(v.factor(0, 2), precondition_error);
    EXPECT_THROW(v.factor(5, 8), precondition_error);
    EXPECT_THROW(binary_word::ones(64).prepend(0), precondition_error);
}

TEST(Word, ConstructorValidates) {
    EXPECT_THROW(binary_word(0b100, 2), precondition_error);
    EXPECT_THROW(binary_word(0, 65), precondition_error);
    EXPECT_THROW(w("101").at(4), precondition_error);
    EXPECT_EQ(w("101").at(3), 1);
}

TEST(Word, LexicographicOrder) {
    EXPECT_LT(w("0011"), w("0101"));
    EXPECT_LT(w("01"), w("010"));
    EXPECT_LT(w(""), w("0"));
    EXPECT_LT(w("011"), w("1"));
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto words = pnlab::testing::all_words(n);
        for (std::size_t i = 0; i + 1 < words.size(); ++i) {
            EXPECT_LT(words[i], words[i + 1]);
            EXPECT_LT(words[i].to_string(), words[i + 1].to_string());
        }
    }
}
