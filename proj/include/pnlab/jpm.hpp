#pragma once

#include <cstddef>

#include "errors.hpp"
#include "ones.hpp"
#include "word.hpp"

namespace pnlab {

/// Constant-time answers to "does w have a factor of length k with exactly d
/// ones?" from the maximum- and minimum-ones functions of w.
struct jumbled_index {
    std::size_t n = 0;
    ones_function fmax; ///< most 1s in a length-k factor
    ones_function fmin; ///< fewest 1s in a length-k factor
};

/// fmax = f_w and fmin(k) = k - f_{complement(w)}(k).
inline jumbled_index build_index(const binary_word& w) {
    jumbled_index idx;
    idx.n = w.size();
    idx.fmax = max_ones(w);
    const ones_function zeros = max_ones(complement(w));
    idx.fmin = ones_function(idx.n);
    for (std::size_t k = 1; k <= idx.n; ++k) idx.fmin.set(k, static_cast<int>(k) - zeros(k));
    return idx;
}

/// Sliding a length-k window changes its count by at most one, so every value
/// between fmin(k) and fmax(k) is attained.
/// @throws precondition_error if k > n.
inline bool query(const jumbled_index& idx, std::size_t k, int d) {
    if (k > idx.n) throw precondition_error("query: factor length exceeds word length");
    return idx.fmin(k) <= d && d <= idx.fmax(k);
}

inline bool operator==(const jumbled_index& a, const jumbled_index& b) {
    return a.n == b.n && a.fmax == b.fmax && a.fmin == b.fmin;
}

} // namespace pnlab
