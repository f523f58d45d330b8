#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "normality.hpp"
#include "ones.hpp"
#include "word.hpp"

namespace pnlab {

/// w <-> v: prepending a 1 makes them pn-equivalent at length n+1.
/// @throws precondition_error on a length mismatch.
inline bool collapses(const binary_word& w, const binary_word& v) {
    if (w.size() != v.size()) throw precondition_error("collapses: words differ in length");
    return max_ones(w.prepend(1)) == max_ones(v.prepend(1));
}

namespace detail {

inline void require_lr(const binary_word& w, const char* what) {
    if (!is_suffix_normal(w)) throw precondition_error(std::string(what) + ": " + w.to_string() + " is not a least representative");
}

} // namespace detail

/// For a least representative w: is 1·w a least representative?
/// Decided by f_{1w}(i) = f_w(i) on [n] and f_{1w}(n+1) = f_w(n) + 1.
inline bool extends_to_lr(const binary_word& w) {
    detail::require_lr(w, "extends_to_lr");
    const std::size_t n = w.size();
    const ones_function f = max_ones(w);
    const ones_function g = max_ones(w.prepend(1));
    for (std::size_t i = 1; i <= n; ++i) {
        if (g(i) != f(i)) return false;
    }
    return g(n + 1) == f(n) + 1;
}

/// A least representative whose 1-prepend is not a least representative.
inline bool extension_critical(const binary_word& w) { return !extends_to_lr(w); }

/// s satisfies the necessary condition for being the suffix-ones function of a
/// least representative: for every i in [n],
/// s(i) >= s(n) - s(n-i+1), plus one when s steps at n-i+1.
inline bool validate_lr_profile(const ones_function& s) {
    const std::size_t n = s.size();
    for (std::size_t i = 1; i <= n; ++i) {
        int threshold = s(n) - s(n - i + 1);
        if (s(n - i + 1) != s(n - i)) threshold += 1;
        if (s(i) < threshold) return false;
    }
    return true;
}

/**
 * @brief The word u = (1·w[1..n-1])^R bounding the collapse band from below.
 *
 * Requires w to be a least representative other than 0^n with 1·w also a
 * least representative (equivalently: w collapses with no lexicographically
 * smaller least representative). Then u collapses with w and f_u is
 * pointwise minimal among the collapsing words.
 */
inline binary_word lower_band_word(const binary_word& w) {
    if (w.count_ones() == 0) throw precondition_error("lower_band_word: w must not be 0^n");
    if (!extends_to_lr(w)) throw precondition_error("lower_band_word: 1w is not a least representative");
    return reverse(w.prefix(w.size() - 1).prepend(1));
}

/**
 * @brief Repairs the lower band so that its deviations from f_w are symmetric.
 *
 * Collapsing words differ from f_w in mirrored pairs (i, n-i+1). For every i
 * in the first half where exactly one side of the pair agrees with f_w, the
 * deviating side is raised by one.
 */
inline ones_function adjusted_lower_band(const binary_word& w, const binary_word& u) {
    if (!extends_to_lr(w)) throw precondition_error("adjusted_lower_band: 1w is not a least representative");
    if (!collapses(w, u)) throw precondition_error("adjusted_lower_band: u does not collapse with w");
    const std::size_t n = w.size();
    const ones_function fw = max_ones(w);
    const ones_function fu = max_ones(u);
    ones_function hat = fu;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        const std::size_t j = n - i + 1;
        const bool left_agrees = fu(i) == fw(i);
        const bool right_agrees = fu(j) == fw(j);
        if (left_agrees && !right_agrees) hat.set(j, fu(j) + 1);
        if (!left_agrees && right_agrees) hat.set(i, fu(i) + 1);
    }
    return hat;
}

/// The interval [lower, upper] of maximum-ones functions that can collapse
/// with the extender. `free_positions` lists the first-half indices i at which
/// both i and n-i+1 may drop below `upper`.
struct band_spec {
    ones_function upper;
    ones_function lower;
    std::vector<std::size_t> free_positions;
};

inline band_spec band_for(const binary_word& w) {
    band_spec band;
    band.upper = max_ones(w);
    band.lower = adjusted_lower_band(w, lower_band_word(w));
    const std::size_t n = w.size();
    for (std::size_t i = 1; i <= (n + 1) / 2; ++i) {
        const std::size_t j = n - i + 1;
        if (band.lower(i) < band.upper(i) && band.lower(j) < band.upper(j)) band.free_positions.push_back(i);
    }
    return band;
}

/// Every function obtained from `upper` by lowering a subset of the free
/// pairs by one, starting with `upper` itself (empty subset) and ordered by
/// subset bitmask over `free_positions`.
inline std::vector<ones_function> band_vectors(const band_spec& band) {
    const std::size_t n = band.upper.size();
    const std::size_t pairs = band.free_positions.size();
    if (pairs >= 31) throw limit_exceeded("band_vectors: too many free pairs", pairs, 30);
    std::vector<ones_function> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs); ++subset) {
        ones_function g = band.upper;
        for (std::size_t b = 0; b < pairs; ++b) {
            if ((subset >> b) & 1U) {
                const std::size_t i = band.free_positions[b];
                const std::size_t j = n - i + 1;
                g.set(i, band.upper(i) - 1);
                if (j != i) g.set(j, band.upper(j) - 1);
            }
        }
        out.push_back(g);
    }
    return out;
}

/**
 * @brief Conditions 1-3 of the collapse characterization for w' against w.
 *
 * 1. f_{w'}(i) is f_w(i) or f_w(i) - 1;
 * 2. f_{w'}(i) = f_w(i) implies f_{1w'}(i) = f_w(i);
 * 3. f_{w'} passes validate_lr_profile.
 *
 * Also requires w' != w and |w'|_1 = |w|_1. The conditions are necessary for
 * w <-> w' when 1·w is an LR but not sufficient: w = 00111 and w' = 01011
 * meet all three, yet f_{1w'}(3) = 2 < 3 = f_{1w}(3).
 */
inline bool collapse_conditions_hold(const binary_word& w, const binary_word& v) {
    if (w.size() != v.size()) throw precondition_error("collapse_conditions_hold: words differ in length");
    if (v == w || v.count_ones() != w.count_ones()) return false;
    const std::size_t n = w.size();
    const ones_function fw = max_ones(w);
    const ones_function fv = max_ones(v);
    const ones_function extended = max_ones(v.prepend(1));
    for (std::size_t i = 1; i <= n; ++i) {
        if (fv(i) != fw(i) && fv(i) != fw(i) - 1) return false;
        if (fv(i) == fw(i) && extended(i) != fw(i)) return false;
    }
    return validate_lr_profile(fv);
}

/**
 * @brief The least representatives w' != w that collapse with w.
 *
 * Searches the band of w: each band function g that is the maximum-ones
 * function of the least representative w' with suffix-ones g is kept when w'
 * satisfies collapse_conditions_hold and collapses with w. Requires 1·w to be
 * a least representative.
 */
inline std::vector<binary_word> candidate_collapsers(const binary_word& w) {
    if (!extends_to_lr(w)) throw precondition_error("candidate_collapsers: 1w is not a least representative");
    std::vector<binary_word> found;
    if (w.count_ones() == 0) return found; // only w = ε gets past the check above
    const std::size_t n = w.size();
    const band_spec band = band_for(w);
    const ones_function target = max_ones(w.prepend(1));
    for (const auto& g : band_vectors(band)) {
        if (g == band.upper) continue;
        if (!g.is_unit_step() || g(n) != band.upper(n)) continue;
        const binary_word candidate = word_from_suffix_profile(g);
        if (max_ones(candidate) != g) continue;
        if (!collapse_conditions_hold(w, candidate)) continue;
        if (max_ones(candidate.prepend(1)) == target) found.push_back(candidate);
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// A class of least representatives of one length under <->.
struct collapse_class {
    std::size_t n = 0;
    std::vector<binary_word> members; ///< sorted
    binary_word extender;             ///< lexicographic minimum of members
    bool extends = false;             ///< 1·extender is a least representative

    std::size_t size() const noexcept { return members.size(); }
};

enum class collapse_engine {
    brute_force, ///< group by max_ones(1·w)
    band_search, ///< candidate_collapsers from each extender
};

namespace detail {

inline collapse_class make_collapse_class(std::vector<binary_word> members) {
    std::sort(members.begin(), members.end());
    collapse_class c;
    c.n = members.front().size();
    c.extender = members.front();
    c.extends = extends_to_lr(c.extender);
    c.members = std::move(members);
    return c;
}

inline std::vector<binary_word> require_lr_set(std::span<const binary_word> lrs, const char* what) {
    if (lrs.empty()) throw precondition_error(std::string(what) + ": empty input");
    std::vector<binary_word> sorted(lrs.begin(), lrs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& w : sorted) {
        if (w.size() != sorted.front().size()) throw precondition_error(std::string(what) + ": mixed lengths");
        require_lr(w, what);
    }
    return sorted;
}

} // namespace detail

/// Partitions a set of least representatives of one length under <->.
/// Classes are ordered by extender.
inline std::vector<collapse_class> group_collapse_classes(std::span<const binary_word> lrs,
                                                          collapse_engine engine = collapse_engine::brute_force) {
    const auto words = detail::require_lr_set(lrs, "group_collapse_classes");
    std::vector<collapse_class> classes;

    if (engine == collapse_engine::brute_force) {
        std::map<ones_function, std::vector<binary_word>> buckets;
        for (const auto& w : words) buckets[max_ones(w.prepend(1))].push_back(w);
        for (auto& [signature, members] : buckets) classes.push_back(detail::make_collapse_class(std::move(members)));
    } else {
        std::set<binary_word> assigned;
        const std::set<binary_word> available(words.begin(), words.end());
        for (const auto& w : words) {
            if (assigned.contains(w)) continue;
            std::vector<binary_word> members{w};
            // 0^n is the one unassigned minimum that does not extend; its class is {0^n}
            if (extends_to_lr(w)) {
                for (const auto& v : candidate_collapsers(w)) {
                    if (!available.contains(v)) continue;
                    if (assigned.contains(v)) {
                        throw std::logic_error("band search assigned " + v.to_string() + " to two classes");
                    }
                    members.push_back(v);
                }
            }
            for (const auto& v : members) assigned.insert(v);
            classes.push_back(detail::make_collapse_class(std::move(members)));
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const collapse_class& a, const collapse_class& b) { return a.extender < b.extender; });
    return classes;
}

/// The collapse classes of all least representatives of length n.
inline std::vector<collapse_class> collapse_classes(std::size_t n, collapse_engine engine = collapse_engine::brute_force,
                                                    const run_options& options = {}) {
    const auto lrs = enumerate_least_representatives(n, options);
    return group_collapse_classes(lrs, engine);
}

/// Hamming distance between w[1..floor(n/2)] and (w[ceil(n/2)+1..n])^R.
inline int palindromic_distance(const binary_word& w) {
    const std::size_t n = w.size();
    const binary_word head = w.prefix(n / 2);
    const binary_word tail = reverse(w.suffix(n / 2));
    return std::popcount(head.bits() ^ tail.bits());
}

/// Length of the longest palindromic prefix.
/// @throws precondition_error for the empty word.
inline std::size_t palindromic_prefix_length(const binary_word& w) {
    if (w.empty()) throw precondition_error("palindromic_prefix_length: empty word");
    for (std::size_t k = w.size(); k > 1; --k) {
        if (palindromic_distance(w.prefix(k)) == 0) return k;
    }
    return 1;
}

/// 2^ceil(p_d(w · w[n-1..1] · 1) / 2), an upper bound on |[w]_<->| when w and
/// 1·w are least representatives.
inline std::uint64_t class_size_bound(const binary_word& w) {
    if (!extends_to_lr(w)) throw precondition_error("class_size_bound: 1w is not a least representative");
    if (2 * w.size() > binary_word::max_length) throw precondition_error("class_size_bound: word too long");
    const std::size_t n = w.size();
    const binary_word probe = n == 0 ? binary_word::ones(1) : w + reverse(w.prefix(n - 1)).append(1);
    const int distance = palindromic_distance(probe);
    return std::uint64_t{1} << ((distance + 1) / 2);
}

/// Exact non-negative rational, kept reduced.
struct rational {
    long num = 0;
    long den = 1;

    static rational make(long num, long den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) num = -num, den = -den;
        long g = std::gcd(num < 0 ? -num : num, den);
        if (g == 0) g = 1;
        return {num / g, den / g};
    }

    friend bool operator==(const rational&, const rational&) = default;
    friend bool operator<=(long lhs, const rational& rhs) { return lhs * rhs.den <= rhs.num; }
    friend bool operator<=(const rational& lhs, long rhs) { return lhs.num <= rhs * lhs.den; }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Bounds on |Sigma^{n+1}/≡| in terms of ell = |Sigma^n/≡| and pnPal counts.
struct index_bound_report {
    long lower = 0;              ///< ell + npal(n-1)
    rational upper_palcol;       ///< ell + npal(n+1) + (ell - npal(n+1)) / 2
    long upper_remark_paper = 0; ///< 2 ell - npal(n), as published
    long upper_remark_corrected = 0; ///< 2 ell - (npal(n) - 1)
};

inline index_bound_report index_bounds(long ell, long npal_prev, long npal_next, long npal_here) {
    index_bound_report r;
    r.lower = ell + npal_prev;
    r.upper_palcol = rational::make(2 * (ell + npal_next) + (ell - npal_next), 2);
    r.upper_remark_paper = 2 * ell - npal_here;
    r.upper_remark_corrected = 2 * ell - (npal_here - 1);
    return r;
}

/**
 * @brief Least representatives of length n+1 from those of length n.
 *
 * Every 0·w stays a least representative; of the 1-prepends only the one
 * from each collapse class's extender survives. The class {0^n} is skipped:
 * 1·0^n is equivalent to 0·0^{n-1}1, which is already counted.
 */
inline std::vector<binary_word> recursive_lr_step(std::span<const binary_word> lrs,
                                                  collapse_engine engine = collapse_engine::brute_force) {
    const auto words = detail::require_lr_set(lrs, "recursive_lr_step");
    const std::size_t n = words.front().size();
    std::vector<binary_word> next;
    next.reserve(words.size() * 2);
    for (const auto& w : words) next.push_back(w.prepend(0));
    for (const auto& c : group_collapse_classes(words, engine)) {
        if (n >= 1 && c.extender.count_ones() == 0) continue;
        next.push_back(c.extender.prepend(1));
    }
    std::sort(next.begin(), next.end());
    return next;
}

} // namespace pnlab
