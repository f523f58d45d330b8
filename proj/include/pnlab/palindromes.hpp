#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "normality.hpp"
#include "ones.hpp"
#include "parallel.hpp"
#include "word.hpp"

namespace pnlab {

inline bool is_palindrome(const binary_word& w) { return reverse(w) == w; }

/// Prefix normal palindrome: a palindrome that is prefix normal.
inline bool is_pnpal(const binary_word& w) { return is_palindrome(w) && is_prefix_normal(w); }

/**
 * @brief Decides pnPal membership from the maximum-ones function alone.
 *
 * For w != 0^n, w is a prefix normal palindrome iff f_w(k) = f̄_w(n-k+1) for
 * every k in [n]. The characterization only covers words containing a 1;
 * 0^n is a pnPal and is answered directly.
 */
inline bool is_pnpal_by_charfn(const binary_word& w) {
    if (w.count_ones() == 0) return true;
    const ones_function f = max_ones(w);
    return f == reverse_progress(f).reversed();
}

/// NPal(n) in lexicographic order.
struct pnpal_record {
    std::size_t n = 0;
    std::vector<binary_word> words;

    std::size_t count() const noexcept { return words.size(); }
};

/// The palindrome of length n whose first ceil(n/2) letters are `half`.
inline binary_word palindrome_from_half(std::uint64_t half, std::size_t n) {
    const std::size_t free = (n + 1) / 2;
    const std::size_t mirrored = n / 2;
    binary_word head(half, free);
    binary_word tail = reverse(head.prefix(mirrored));
    return head + tail;
}

/// Enumerates the 2^ceil(n/2) palindromes of length n and keeps the pnPals.
inline pnpal_record enumerate_pnpals(std::size_t n, const run_options& options = {}) {
    check_limit(n, options.limits.palindrome, "enumerate_pnpals");
    const std::size_t free = (n + 1) / 2;
    auto chunks = parallel_chunks(std::uint64_t{1} << free, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<binary_word> found;
        for (std::uint64_t half = lo; half < hi; ++half) {
            binary_word w = palindrome_from_half(half, n);
            if (is_pnpal_by_charfn(w)) found.push_back(w);
        }
        return found;
    });
    pnpal_record record;
    record.n = n;
    for (auto& chunk : chunks) record.words.insert(record.words.end(), chunk.begin(), chunk.end());
    return record;
}

inline std::size_t npal(std::size_t n, const run_options& options = {}) { return enumerate_pnpals(n, options).count(); }

/**
 * @brief Maximum-ones function of w = 1·v·1 from the inner palindrome v.
 *
 * Takes the prefix-ones function p_v; for a pnPal w: f_w(1) = 1,
 * f_w(k) = p_v(k-1) + 1 for 1 < k < |w|, and f_w(|w|) = f_w(|w|-1) + 1.
 * The inner word need not be prefix normal (1·010·1 is a pnPal), which is
 * why the prefix-ones profile and not f_v is the input.
 */
inline ones_function pnpal_f_extension(const ones_function& inner_prefix_ones) {
    const std::size_t m = inner_prefix_ones.size();
    const std::size_t n = m + 2;
    ones_function f(n);
    f.set(1, 1);
    for (std::size_t k = 2; k <= n - 1; ++k) f.set(k, inner_prefix_ones(k - 1) + 1);
    f.set(n, f(n - 1) + 1);
    return f;
}

} // namespace pnlab
