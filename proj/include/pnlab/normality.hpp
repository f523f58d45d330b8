#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "ones.hpp"
#include "parallel.hpp"
#include "word.hpp"

namespace pnlab {

/// Controls for the exhaustive routines. `jobs == 0` means all cores.
struct run_options {
    unsigned jobs = 1;
    enumeration_limits limits{};
};

namespace detail {

// Every window of length k holds at most `bound(k)` ones; early exit on the
// first violation.
template <class Bound>
bool windows_bounded_by(const binary_word& w, Bound bound) {
    const std::size_t n = w.size();
    const std::uint64_t bits = w.bits();
    for (std::size_t k = 1; k <= n; ++k) {
        const int limit = bound(k);
        const std::uint64_t window = binary_word::mask(k);
        for (std::size_t shift = 0; shift + k <= n; ++shift) {
            if (std::popcount((bits >> shift) & window) > limit) return false;
        }
    }
    return true;
}

// For a suffix normal w: is 1·w suffix normal? Only the prefixes of 1·w are
// new windows, so it suffices that 1 + p_w(k-1) <= s_w(k) for k in [n].
inline bool prepend_one_keeps_suffix_normal(const binary_word& w) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        if (1 + w.prefix_count(k - 1) > w.suffix_count(k)) return false;
    }
    return true;
}

} // namespace detail

/// f_w = p_w.
inline bool is_prefix_normal(const binary_word& w) {
    return detail::windows_bounded_by(w, [&](std::size_t k) { return w.prefix_count(k); });
}

/// f_w = s_w. Suffix normal words are exactly the least representatives
/// (lexicographically smallest members) of their classes.
inline bool is_suffix_normal(const binary_word& w) {
    return detail::windows_bounded_by(w, [&](std::size_t k) { return w.suffix_count(k); });
}

inline bool is_least_representative(const binary_word& w) { return is_suffix_normal(w); }

/// The unique prefix normal word with the same maximum-ones function as w;
/// letter i is f_w(i) - f_w(i-1).
inline binary_word prefix_normal_form(const binary_word& w) { return word_from_prefix_profile(max_ones(w)); }

/// The lexicographically smallest word of w's class: the reversal of its
/// prefix normal form.
inline binary_word least_representative(const binary_word& w) { return reverse(prefix_normal_form(w)); }

/// @throws precondition_error on a length mismatch.
inline bool pn_equivalent(const binary_word& u, const binary_word& v) {
    if (u.size() != v.size()) throw precondition_error("pn_equivalent: words differ in length");
    return max_ones(u) == max_ones(v);
}

/// All words of length |w| with the same maximum-ones function, sorted.
inline std::vector<binary_word> class_members(const binary_word& w, const run_options& options = {}) {
    const std::size_t n = w.size();
    check_limit(n, options.limits.enumeration, "class_members");
    const ones_function target = max_ones(w);
    auto chunks = parallel_chunks(std::uint64_t{1} << n, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<binary_word> found;
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            binary_word v(bits, n);
            if (max_ones(v) == target) found.push_back(v);
        }
        return found;
    });
    std::vector<binary_word> members;
    for (auto& chunk : chunks) members.insert(members.end(), chunk.begin(), chunk.end());
    return members;
}

/**
 * @brief All suffix normal words of length n in lexicographic order.
 *
 * Depth-first: every suffix of a suffix normal word is suffix normal, so the
 * words of length m+1 are found by prepending 0 (always allowed) or 1 (checked
 * incrementally) to those of length m. Subtrees below a fixed seed depth are
 * distributed over the workers; the result is sorted, so it does not depend
 * on the worker count.
 */
inline std::vector<binary_word> enumerate_least_representatives(std::size_t n, const run_options& options = {}) {
    check_limit(n, options.limits.enumeration, "enumerate_least_representatives");

    auto grow = [](std::vector<binary_word> level) {
        std::vector<binary_word> next;
        next.reserve(level.size() * 2);
        for (const auto& w : level) {
            next.push_back(w.prepend(0));
            if (detail::prepend_one_keeps_suffix_normal(w)) next.push_back(w.prepend(1));
        }
        return next;
    };

    const std::size_t seed_depth = std::min<std::size_t>(n, 12);
    std::vector<binary_word> seeds{binary_word{}};
    for (std::size_t m = 0; m < seed_depth; ++m) seeds = grow(std::move(seeds));

    std::vector<binary_word> result;
    if (seed_depth == n) {
        result = std::move(seeds);
    } else {
        auto chunks = parallel_chunks(seeds.size(), options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<binary_word> out;
            // explicit stack; each entry is a suffix normal word still to grow
            std::vector<binary_word> stack(seeds.begin() + static_cast<std::ptrdiff_t>(lo),
                                           seeds.begin() + static_cast<std::ptrdiff_t>(hi));
            while (!stack.empty()) {
                binary_word w = stack.back();
                stack.pop_back();
                if (w.size() == n) {
                    out.push_back(w);
                    continue;
                }
                stack.push_back(w.prepend(0));
                if (detail::prepend_one_keeps_suffix_normal(w)) stack.push_back(w.prepend(1));
            }
            return out;
        });
        for (auto& chunk : chunks) result.insert(result.end(), chunk.begin(), chunk.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// All prefix normal words of length n (reversals of the least
/// representatives), sorted.
inline std::vector<binary_word> enumerate_prefix_normal_words(std::size_t n, const run_options& options = {}) {
    auto words = enumerate_least_representatives(n, options);
    for (auto& w : words) w = reverse(w);
    std::sort(words.begin(), words.end());
    return words;
}

/// One pn-equivalence class.
struct pn_class {
    binary_word npf;                  ///< prefix normal form, the class maximum
    binary_word lr;                   ///< least representative, the class minimum
    std::uint64_t size = 0;
    std::vector<binary_word> members; ///< sorted; filled only when requested
};

/// The quotient Sigma^n / pn-equivalence, keyed by the maximum-ones function.
struct class_partition_result {
    std::size_t n = 0;
    std::map<ones_function, pn_class> classes;

    std::size_t index() const noexcept { return classes.size(); }
};

/// Partitions all 2^n words by max_ones.
inline class_partition_result class_partition(std::size_t n, bool materialize_members = false,
                                              const run_options& options = {}) {
    check_limit(n, options.limits.enumeration, "class_partition");
    using bucket_map = std::map<ones_function, pn_class>;
    auto chunks = parallel_chunks(std::uint64_t{1} << n, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        bucket_map local;
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            binary_word v(bits, n);
            auto [it, inserted] = local.try_emplace(max_ones(v));
            pn_class& c = it->second;
            if (inserted) {
                c.npf = word_from_prefix_profile(it->first);
                c.lr = reverse(c.npf);
            }
            ++c.size;
            if (materialize_members) c.members.push_back(v);
        }
        return local;
    });

    class_partition_result result;
    result.n = n;
    for (auto& chunk : chunks) {
        for (auto& [signature, c] : chunk) {
            auto [it, inserted] = result.classes.try_emplace(signature, std::move(c));
            if (!inserted) {
                it->second.size += c.size;
                it->second.members.insert(it->second.members.end(), c.members.begin(), c.members.end());
            }
        }
    }
    return result;
}

} // namespace pnlab
