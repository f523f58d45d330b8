#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pnlab {

/**
 * @brief A binary word of length at most 64, packed into one machine word.
 *
 * Letters are addressed 1-based: `w[1]` is the leftmost letter and `w[n]` the
 * rightmost. Internally w[1] sits at bit n-1 and w[n] at bit 0, so for words
 * of equal length the lexicographic order (0 < 1) coincides with the numeric
 * order of `bits()`.
 */
class binary_word {
public:
    static constexpr std::size_t max_length = 64;

    constexpr binary_word() = default;

    /// @throws precondition_error if `length > 64` or `bits` has a set bit at
    /// or above position `length`.
    constexpr binary_word(std::uint64_t bits, std::size_t length) : bits_(bits), length_(length) {
        if (length > max_length) throw precondition_error("binary_word: length exceeds 64");
        if ((bits & ~mask(length)) != 0) throw precondition_error("binary_word: bits beyond length");
    }

    static constexpr binary_word zeros(std::size_t n) { return binary_word(0, n); }
    static constexpr binary_word ones(std::size_t n) { return binary_word(mask(n), n); }

    constexpr std::size_t size() const noexcept { return length_; }
    constexpr bool empty() const noexcept { return length_ == 0; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    /// Letter i, 1-based, unchecked.
    constexpr int operator[](std::size_t i) const noexcept {
        return static_cast<int>((bits_ >> (length_ - i)) & 1U);
    }

    /// Letter i, 1-based, bounds checked.
    constexpr int at(std::size_t i) const {
        if (i == 0 || i > length_) throw precondition_error("binary_word::at: index out of range");
        return (*this)[i];
    }

    /// |w|_1
    constexpr int count_ones() const noexcept { return std::popcount(bits_); }

    /// Number of 1s in the length-k prefix.
    constexpr int prefix_count(std::size_t k) const noexcept {
        return k == 0 ? 0 : std::popcount(bits_ >> (length_ - k));
    }

    /// Number of 1s in the length-k suffix.
    constexpr int suffix_count(std::size_t k) const noexcept { return std::popcount(bits_ & mask(k)); }

    /// Number of 1s in the factor w[i..i+k-1].
    constexpr int factor_count(std::size_t i, std::size_t k) const noexcept {
        if (k == 0) return 0;
        return std::popcount((bits_ >> (length_ - (i + k - 1))) & mask(k));
    }

    /// The factor w[i..j] (1-based, inclusive); empty when j < i.
    constexpr binary_word factor(std::size_t i, std::size_t j) const {
        if (j < i) return {};
        if (i == 0 || j > length_) throw precondition_error("binary_word::factor: range out of bounds");
        std::size_t k = j - i + 1;
        return binary_word((bits_ >> (length_ - j)) & mask(k), k);
    }

    constexpr binary_word prefix(std::size_t k) const { return factor(1, k); }
    constexpr binary_word suffix(std::size_t k) const { return factor(length_ - k + 1, length_); }

    /// x·w
    constexpr binary_word prepend(int letter) const {
        check_room(1);
        return binary_word(bits_ | (static_cast<std::uint64_t>(letter & 1) << length_), length_ + 1);
    }

    /// w·x
    constexpr binary_word append(int letter) const {
        check_room(1);
        return binary_word((bits_ << 1) | static_cast<std::uint64_t>(letter & 1), length_ + 1);
    }

    friend constexpr binary_word operator+(const binary_word& lhs, const binary_word& rhs) {
        lhs.check_room(rhs.length_);
        if (rhs.length_ == max_length) return rhs;
        return binary_word((lhs.bits_ << rhs.length_) | rhs.bits_, lhs.length_ + rhs.length_);
    }

    friend constexpr bool operator==(const binary_word&, const binary_word&) = default;

    /// Lexicographic order with 0 < 1; a proper prefix precedes its extensions.
    friend constexpr std::strong_ordering operator<=>(const binary_word& lhs, const binary_word& rhs) {
        std::size_t common = lhs.length_ < rhs.length_ ? lhs.length_ : rhs.length_;
        if (common > 0) {
            std::uint64_t a = lhs.bits_ >> (lhs.length_ - common);
            std::uint64_t b = rhs.bits_ >> (rhs.length_ - common);
            if (a != b) return a <=> b;
        }
        return lhs.length_ <=> rhs.length_;
    }

    std::string to_string() const {
        std::string out(length_, '0');
        for (std::size_t i = 1; i <= length_; ++i) {
            if ((*this)[i]) out[i - 1] = '1';
        }
        return out;
    }

    static constexpr std::uint64_t mask(std::size_t k) noexcept {
        return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    }

private:
    constexpr void check_room(std::size_t extra) const {
        if (length_ + extra > max_length) throw precondition_error("binary_word: result exceeds 64 letters");
    }

    std::uint64_t bits_ = 0;
    std::size_t length_ = 0;
};

/// Parses a string over {'0','1'}; leftmost character becomes w[1].
/// @throws parse_error naming the 1-based position of the first bad character.
inline binary_word parse_word(std::string_view text) {
    if (text.size() > binary_word::max_length) {
        throw parse_error("word longer than 64 letters", binary_word::max_length + 1);
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw parse_error("invalid letter '" + std::string(1, c) + "' at position " + std::to_string(i + 1),
                              i + 1);
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return binary_word(bits, text.size());
}

/// w^R
constexpr binary_word reverse(const binary_word& w) {
    std::size_t n = w.size();
    if (n == 0) return w;
    std::uint64_t x = w.bits();
    // full 64-bit reversal, then drop the unused low bits
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    x = (x >> 32) | (x << 32);
    return binary_word(x >> (64 - n), n);
}

/// Every letter flipped.
constexpr binary_word complement(const binary_word& w) {
    return binary_word(~w.bits() & binary_word::mask(w.size()), w.size());
}

} // namespace pnlab
