#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace pnlab {

/**
 * @brief An integer sequence v(0), v(1), ..., v(n) over the domain [n]_0.
 *
 * Holds the maximum-ones, prefix-ones and suffix-ones functions of a word
 * and the reverse-progress transform of any of them. v(0) is stored
 * explicitly. Functions obtained from a word satisfy v(0) = 0 and unit steps;
 * the reverse-progress transform does not (it starts at v(n) and decreases),
 * so those invariants are checked by `is_unit_step()` rather than enforced.
 */
class ones_function {
public:
    static constexpr std::size_t max_length = binary_word::max_length;

    ones_function() = default;

    /// Domain [n]_0 with all values zero.
    explicit ones_function(std::size_t n) : n_(n) {
        if (n > max_length) throw precondition_error("ones_function: length exceeds 64");
    }

    /// Builds v from the values v(1..n); v(0) = 0.
    static ones_function from_values(std::span<const int> tail) {
        ones_function f(tail.size());
        for (std::size_t k = 0; k < tail.size(); ++k) f.set(k + 1, tail[k]);
        return f;
    }

    static ones_function from_values(std::initializer_list<int> tail) {
        return from_values(std::span<const int>(tail.begin(), tail.size()));
    }

    std::size_t size() const noexcept { return n_; }

    int operator()(std::size_t k) const noexcept { return values_[k]; }

    void set(std::size_t k, int value) {
        if (k > n_) throw precondition_error("ones_function::set: index out of range");
        values_[k] = static_cast<std::int16_t>(value);
    }

    /// v(0) = 0, v(k) - v(k-1) in {0, 1}.
    bool is_unit_step() const noexcept {
        if (values_[0] != 0) return false;
        for (std::size_t k = 1; k <= n_; ++k) {
            int step = values_[k] - values_[k - 1];
            if (step != 0 && step != 1) return false;
        }
        return true;
    }

    /// The reversed function k -> v(n-k+1) on [n]; the result has v(0) = 0.
    ones_function reversed() const {
        ones_function r(n_);
        for (std::size_t k = 1; k <= n_; ++k) r.values_[k] = values_[n_ - k + 1];
        return r;
    }

    /// Sum of v(1..n).
    long sum() const noexcept {
        long total = 0;
        for (std::size_t k = 1; k <= n_; ++k) total += values_[k];
        return total;
    }

    std::vector<int> values() const { return {values_.begin() + 1, values_.begin() + 1 + n_}; }

    /// Comma-separated v(1..n).
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 1; k <= n_; ++k) {
            if (k > 1) out += ',';
            out += std::to_string(values_[k]);
        }
        return out;
    }

    friend bool operator==(const ones_function& a, const ones_function& b) noexcept {
        return a.n_ == b.n_ && std::equal(a.values_.begin(), a.values_.begin() + a.n_ + 1, b.values_.begin());
    }

    friend std::strong_ordering operator<=>(const ones_function& a, const ones_function& b) noexcept {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (std::size_t k = 0; k <= a.n_; ++k) {
            if (auto c = a.values_[k] <=> b.values_[k]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    std::size_t n_ = 0;
    std::array<std::int16_t, max_length + 1> values_{};
};

/// Parses "v(1),v(2),...,v(n)"; the empty string is the function on [0]_0.
inline ones_function parse_ones_function(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        int value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 1000) throw parse_error("ones-function value too large", start + 1);
            ++i;
        }
        if (i == start) throw parse_error("expected a non-negative integer at position " + std::to_string(i + 1), i + 1);
        values.push_back(value);
        if (i < text.size()) {
            if (text[i] != ',') throw parse_error("expected ',' at position " + std::to_string(i + 1), i + 1);
            ++i;
            if (i == text.size()) throw parse_error("trailing ','", i);
        }
    }
    if (values.size() > ones_function::max_length) throw parse_error("ones-function longer than 64 values", 1);
    return ones_function::from_values(values);
}

/// f_w(k): the maximal number of 1s in a factor of length k.
///
/// One sliding pass per window length, each window counted by popcount.
inline ones_function max_ones(const binary_word& w) {
    const std::size_t n = w.size();
    ones_function f(n);
    const std::uint64_t bits = w.bits();
    for (std::size_t k = 1; k <= n; ++k) {
        const std::uint64_t window = binary_word::mask(k);
        int best = 0;
        for (std::size_t shift = 0; shift + k <= n; ++shift) {
            best = std::max(best, std::popcount((bits >> shift) & window));
            if (best == static_cast<int>(k)) break;
        }
        f.set(k, best);
    }
    return f;
}

/// p_w(k): 1s in the length-k prefix.
inline ones_function prefix_ones(const binary_word& w) {
    ones_function p(w.size());
    for (std::size_t k = 1; k <= w.size(); ++k) p.set(k, w.prefix_count(k));
    return p;
}

/// s_w(k): 1s in the length-k suffix.
inline ones_function suffix_ones(const binary_word& w) {
    ones_function s(w.size());
    for (std::size_t k = 1; k <= w.size(); ++k) s.set(k, w.suffix_count(k));
    return s;
}

/**
 * @brief The reverse-progress transform f̄ of a ones-function.
 *
 * f̄(0) = f(n) and f̄(k) = f̄(k-1) - (f(k-1) - f(k-2)) with f(-1) = f(0) = 0,
 * so f̄ replays the unit steps of f backwards from the total. Its reversal
 * f̄^R is the sequence f̄(n), ..., f̄(1), available via `reversed()`.
 */
inline ones_function reverse_progress(const ones_function& f) {
    const std::size_t n = f.size();
    ones_function bar(n);
    bar.set(0, f(n));
    auto at = [&](std::ptrdiff_t k) { return k <= 0 ? 0 : f(static_cast<std::size_t>(k)); };
    for (std::size_t k = 1; k <= n; ++k) {
        auto j = static_cast<std::ptrdiff_t>(k);
        bar.set(k, bar(k - 1) - (at(j - 1) - at(j - 2)));
    }
    return bar;
}

/// The maximal-one sum: f(1) + ... + f(n).
inline long sigma(const ones_function& f) { return f.sum(); }

/// The word whose letter i is v(i) - v(i-1). For f_w this is the prefix normal
/// form of w.
/// @throws precondition_error if v is not unit-step.
inline binary_word word_from_prefix_profile(const ones_function& v) {
    if (!v.is_unit_step()) throw precondition_error("profile is not a unit-step ones-function");
    std::uint64_t bits = 0;
    for (std::size_t i = 1; i <= v.size(); ++i) bits = (bits << 1) | static_cast<std::uint64_t>(v(i) - v(i - 1));
    return binary_word(bits, v.size());
}

/// The word whose suffix-ones function is v, i.e. letter n-k+1 is v(k) - v(k-1).
inline binary_word word_from_suffix_profile(const ones_function& v) {
    return reverse(word_from_prefix_profile(v));
}

} // namespace pnlab
