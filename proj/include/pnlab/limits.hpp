#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pnlab {

/// Upper bounds on the word length for the exhaustive routines.
struct enumeration_limits {
    std::size_t enumeration = 24;     ///< LR enumeration, class partitions, collapse classes
    std::size_t oracle = 16;          ///< brute-force scans over all of Sigma^n
    std::size_t collapse_oracle = 14; ///< brute-force collapse partition
    std::size_t palindrome = 34;      ///< half-space palindrome enumeration

    /// Defaults, with every limit replaced by PNLAB_MAX_N when that variable
    /// holds a valid integer (capped at 64).
    static enumeration_limits from_environment() {
        enumeration_limits limits;
        const char* raw = std::getenv("PNLAB_MAX_N");
        if (raw == nullptr) return limits;
        std::string_view text(raw);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) return limits;
        value = std::min<std::size_t>(value, 64);
        limits.enumeration = limits.oracle = limits.collapse_oracle = limits.palindrome = value;
        return limits;
    }
};

inline void check_limit(std::size_t n, std::size_t limit, std::string_view what) {
    if (n > limit) {
        throw limit_exceeded(std::string(what) + ": length " + std::to_string(n) +
                                 " exceeds limit " + std::to_string(limit),
                             n, limit);
    }
}

} // namespace pnlab
