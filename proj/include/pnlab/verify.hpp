#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collapse.hpp"
#include "errors.hpp"
#include "normality.hpp"
#include "ones.hpp"
#include "palindromes.hpp"
#include "parallel.hpp"
#include "word.hpp"

namespace pnlab::verify {

/// Outcome of checking one statement for n = first..n_max.
struct report {
    std::string theorem;
    std::vector<std::string> lines;
    bool passed = true;
    std::optional<std::string> counterexample; ///< first failing word, if any
    std::vector<std::size_t> flagged;          ///< lengths with a documented discrepancy
};

/// Memoised per-length counts shared by the checkers.
class count_cache {
public:
    explicit count_cache(const run_options& options) : options_(options) {}

    const std::vector<binary_word>& lrs(std::size_t n) {
        auto it = lrs_.find(n);
        if (it == lrs_.end()) it = lrs_.emplace(n, enumerate_least_representatives(n, options_)).first;
        return it->second;
    }

    long index(std::size_t n) { return static_cast<long>(lrs(n).size()); }

    long npal(std::size_t n) {
        auto it = npal_.find(n);
        if (it == npal_.end()) it = npal_.emplace(n, static_cast<long>(pnlab::npal(n, options_))).first;
        return it->second;
    }

    const std::vector<collapse_class>& classes(std::size_t n) {
        auto it = classes_.find(n);
        if (it == classes_.end()) it = classes_.emplace(n, group_collapse_classes(lrs(n))).first;
        return it->second;
    }

    const run_options& options() const { return options_; }

private:
    run_options options_;
    std::map<std::size_t, std::vector<binary_word>> lrs_;
    std::map<std::size_t, long> npal_;
    std::map<std::size_t, std::vector<collapse_class>> classes_;
};

/// Result of one length: `failure` holds the counterexample text when the
/// statement fails; `detail` is appended to the PASS/FAIL line.
struct step {
    std::optional<std::string> failure;
    std::string detail;
    std::vector<std::string> notes; ///< extra lines printed before the verdict
    bool flagged = false;
};

using step_fn = std::function<step(std::size_t, count_cache&)>;

namespace detail {

inline std::string word_text(const binary_word& w) { return w.empty() ? std::string("ε") : w.to_string(); }

inline step fail_with(const binary_word& w) { return {word_text(w), {}, {}, false}; }

template <class Fn>
std::optional<binary_word> first_word_failing(std::size_t n, const run_options& options, Fn ok) {
    check_limit(n, options.limits.enumeration, "verify");
    auto chunks = parallel_chunks(std::uint64_t{1} << n, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            binary_word w(bits, n);
            if (!ok(w)) return std::optional<binary_word>(w);
        }
        return std::optional<binary_word>{};
    });
    for (auto& c : chunks) {
        if (c) return c;
    }
    return std::nullopt;
}

inline bool is_zero_or_one_power(const binary_word& w) {
    return w.count_ones() == 0 || w.count_ones() == static_cast<int>(w.size());
}

inline step check_palchar(std::size_t n, count_cache& cache) {
    auto bad = first_word_failing(n, cache.options(),
                                  [](const binary_word& w) { return is_pnpal(w) == is_pnpal_by_charfn(w); });
    return bad ? fail_with(*bad) : step{};
}

inline step check_collapstheo(std::size_t n, count_cache& cache) {
    const auto& brute = cache.classes(n);
    const auto band = group_collapse_classes(cache.lrs(n), collapse_engine::band_search);
    bool engines_agree = brute.size() == band.size();
    for (std::size_t c = 0; engines_agree && c < brute.size(); ++c) engines_agree = brute[c].members == band[c].members;
    if (!engines_agree) return {"engine-mismatch", "classes=" + std::to_string(brute.size()), {}, false};

    for (const auto& c : brute) {
        if (!is_suffix_normal(c.extender) || !extends_to_lr(c.extender)) continue;
        for (const auto& v : cache.lrs(n)) {
            if (v == c.extender || v.count_ones() != c.extender.count_ones()) continue;
            const bool member = std::binary_search(c.members.begin(), c.members.end(), v);
            if (member != collapse_conditions_hold(c.extender, v)) {
                return {word_text(c.extender) + "/" + word_text(v), member ? "conditions reject a collapser" : "conditions accept a non-collapser", {}, false};
            }
        }
    }
    return {std::nullopt, "classes=" + std::to_string(brute.size()), {}, false};
}

inline step check_collapsindex(std::size_t n, count_cache& cache) {
    std::size_t largest = 0;
    for (const auto& c : cache.classes(n)) {
        largest = std::max(largest, c.size());
        if (!c.extends) continue;
        if (c.size() > class_size_bound(c.extender)) return fail_with(c.extender);
    }
    return {std::nullopt, "max_class=" + std::to_string(largest), {}, false};
}

inline step check_palcol(std::size_t n, count_cache& cache) {
    const long ell = cache.index(n);
    const long actual = cache.index(n + 1);
    const auto b = index_bounds(ell, cache.npal(n - 1), cache.npal(n + 1), cache.npal(n));
    std::string detail = "ell=" + std::to_string(ell) + " lower=" + std::to_string(b.lower) +
                         " actual=" + std::to_string(actual) + " upper=" + b.upper_palcol.to_string();
    if (b.lower > actual) return {"lower bound " + std::to_string(b.lower) + " > " + std::to_string(actual), detail, {}, false};
    if (!(actual <= b.upper_palcol)) {
        return {"upper bound " + b.upper_palcol.to_string() + " < " + std::to_string(actual), detail, {}, false};
    }
    return {std::nullopt, detail, {}, false};
}

inline step check_notpal(std::size_t n, count_cache& cache) {
    for (const auto& w : enumerate_pnpals(n, cache.options()).words) {
        if (w.count_ones() == static_cast<int>(n)) continue;
        if (is_suffix_normal(w.prepend(1)) || !is_suffix_normal(w.append(1))) return fail_with(w);
    }
    return {};
}

inline step check_symminf(std::size_t n, count_cache& cache) {
    for (const auto& w : cache.lrs(n)) {
        const ones_function f = max_ones(w);
        const ones_function g = max_ones(w.prepend(1));
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t j = n - i + 1;
            if ((g(i) != f(i)) != (g(j) != f(j))) return fail_with(w);
        }
    }
    return {};
}

inline step check_leastsuffix(std::size_t n, count_cache& cache) {
    const auto partition = class_partition(n, true, cache.options());
    for (const auto& [signature, c] : partition.classes) {
        int prefix_normal = 0;
        int suffix_normal = 0;
        for (const auto& v : c.members) {
            prefix_normal += is_prefix_normal(v);
            suffix_normal += is_suffix_normal(v);
        }
        const auto [lo, hi] = std::minmax_element(c.members.begin(), c.members.end());
        if (prefix_normal != 1 || suffix_normal != 1 || c.npf != *hi || c.lr != *lo || c.lr != reverse(c.npf) ||
            !is_prefix_normal(c.npf) || !is_suffix_normal(c.lr)) {
            return fail_with(c.lr);
        }
    }
    return {std::nullopt, "classes=" + std::to_string(partition.index()), {}, false};
}

inline step check_corlol(std::size_t n, count_cache& cache) {
    const auto partition = class_partition(n, false, cache.options());
    for (const auto& [signature, c] : partition.classes) {
        if ((c.size == 1) != is_pnpal(c.lr)) return fail_with(c.lr);
    }
    return {};
}

inline step check_falsecollapse(std::size_t n, count_cache& cache) {
    const auto& lrs = cache.lrs(n);
    std::map<ones_function, std::vector<binary_word>> zero_prepended;
    for (const auto& w : lrs) zero_prepended[max_ones(w.prepend(0))].push_back(w);
    const binary_word zeros = binary_word::zeros(n);
    const binary_word last_one = n == 0 ? binary_word{} : binary_word(1, n);
    bool special_seen = false;
    for (const auto& v : lrs) {
        auto it = zero_prepended.find(max_ones(v.prepend(1)));
        if (it == zero_prepended.end()) continue;
        for (const auto& w : it->second) {
            if (w == v) continue;
            if (!(v == zeros && w == last_one)) return fail_with(v);
            special_seen = true;
        }
    }
    if (n >= 1 && !special_seen) return fail_with(zeros);
    return {};
}

inline step check_smallsum(std::size_t n, count_cache& cache) {
    for (const auto& c : cache.classes(n)) {
        if (c.size() < 2) continue;
        if (!c.extends) return fail_with(c.extender);
        const ones_function fe = max_ones(c.extender);
        for (const auto& v : c.members) {
            if (v == c.extender) continue;
            const ones_function fv = max_ones(v);
            for (std::size_t i = 1; i <= n; ++i) {
                if (fv(i) > fe(i)) return fail_with(v);
            }
            if (!(sigma(fv) < sigma(fe))) return fail_with(v);
        }
    }
    return {};
}

inline step check_lexsmall(std::size_t n, count_cache& cache) {
    for (const auto& c : cache.classes(n)) {
        if (c.extender != *std::min_element(c.members.begin(), c.members.end())) return fail_with(c.extender);
        if (c.extender.count_ones() == 0 && n > 0) {
            // the class of 0^n: a singleton whose 1-prepend is not a least representative
            if (c.size() != 1 || c.extends) return fail_with(c.extender);
            continue;
        }
        for (const auto& v : c.members) {
            if (extends_to_lr(v) != (v == c.extender)) return fail_with(v);
        }
    }
    return {};
}

inline step check_pchar(std::size_t n, count_cache& cache) {
    for (const auto& w : cache.lrs(n)) {
        if (!validate_lr_profile(suffix_ones(w))) return fail_with(w);
    }
    return {};
}

/// w = 1^n, or w starts with 1^k 0 1 where k is the length of its leading
/// run of 1s (the mirrored suffix 1 0 1^k may overlap the prefix).
inline bool doubled_zero_shape(const binary_word& w) {
    const std::size_t n = w.size();
    if (w.count_ones() == static_cast<int>(n)) return true;
    std::size_t k = 0;
    while (k < n && w[k + 1] == 1) ++k;
    return k >= 1 && k + 2 <= n && w[k + 1] == 0 && w[k + 2] == 1;
}

inline step check_doubling(std::size_t n, count_cache& cache) {
    for (const auto& w : enumerate_pnpals(n, cache.options()).words) {
        const binary_word one = binary_word::ones(1);
        const binary_word zero = binary_word::zeros(1);
        if (!is_zero_or_one_power(w)) {
            if (is_pnpal(w + w) || is_pnpal(w + one + w)) return fail_with(w);
            if (is_pnpal(one + w + w + one) && !(n >= 2 && w[1] == 1 && w[2] == 0)) return fail_with(w);
        }
        if (w.count_ones() != 0 && n >= 3 && is_pnpal(w + zero + w) && !doubled_zero_shape(w)) return fail_with(w);
    }
    return {};
}

inline step check_counting_identity(std::size_t n, count_cache& cache) {
    const long next = cache.index(n + 1);
    const long predicted = cache.index(n) + static_cast<long>(cache.classes(n).size()) - 1;
    std::string detail = "index=" + std::to_string(next) + " predicted=" + std::to_string(predicted);
    if (next != predicted) return {"index mismatch", detail, {}, false};
    return {std::nullopt, detail, {}, false};
}

inline step check_palupperbound(std::size_t n, count_cache& cache) {
    const long ell = cache.index(n);
    const long actual = cache.index(n + 1);
    const auto b = index_bounds(ell, n >= 1 ? cache.npal(n - 1) : 0, cache.npal(n + 1), cache.npal(n));
    step s;
    s.detail = "actual=" + std::to_string(actual) + " corrected=" + std::to_string(b.upper_remark_corrected) +
               " published=" + std::to_string(b.upper_remark_paper);
    if (actual > b.upper_remark_paper) {
        s.flagged = true;
        s.notes.push_back("FLAGGED n=" + std::to_string(n) + " published-form 2*ell-npal(n)=" +
                          std::to_string(b.upper_remark_paper) + " < actual=" + std::to_string(actual));
    }
    if (actual > b.upper_remark_corrected) s.failure = "corrected bound " + std::to_string(b.upper_remark_corrected) + " < " + std::to_string(actual);
    return s;
}

struct entry {
    std::string_view name;
    std::size_t first_n;
    step (*fn)(std::size_t, count_cache&);
};

inline const std::vector<entry>& registry() {
    static const std::vector<entry> table{
        {"palchar", 1, check_palchar},
        {"collapstheo", 1, check_collapstheo},
        {"collapsindex", 1, check_collapsindex},
        {"palcol", 2, check_palcol},
        {"notpal", 1, check_notpal},
        {"symminf", 1, check_symminf},
        {"leastsuffix", 1, check_leastsuffix},
        {"corlol", 1, check_corlol},
        {"falsecollapse", 1, check_falsecollapse},
        {"smallsum", 1, check_smallsum},
        {"lexsmall", 1, check_lexsmall},
        {"pchar", 1, check_pchar},
        {"ww-w0w-1ww1", 1, check_doubling},
        {"counting-identity", 1, check_counting_identity},
        {"palupperbound", 1, check_palupperbound},
    };
    return table;
}

} // namespace detail

inline std::vector<std::string> theorem_names() {
    std::vector<std::string> names;
    for (const auto& e : detail::registry()) names.emplace_back(e.name);
    return names;
}

/**
 * @brief Checks one named statement for every length from its first valid n
 * up to n_max, stopping at the first failure.
 *
 * Each length contributes a "PASS n=..." or "FAIL n=... counterexample=..."
 * line. Statements whose published form fails at some lengths
 * (palupperbound) additionally emit "FLAGGED" lines without failing.
 *
 * @throws precondition_error for an unknown name.
 */
inline report run(std::string_view theorem, std::size_t n_max, const run_options& options = {}) {
    const auto& table = detail::registry();
    auto it = std::find_if(table.begin(), table.end(), [&](const detail::entry& e) { return e.name == theorem; });
    if (it == table.end()) throw precondition_error("unknown theorem: " + std::string(theorem));

    report out;
    out.theorem = std::string(theorem);
    count_cache cache(options);
    for (std::size_t n = it->first_n; n <= n_max; ++n) {
        step s = it->fn(n, cache);
        out.lines.insert(out.lines.end(), s.notes.begin(), s.notes.end());
        if (s.flagged) out.flagged.push_back(n);
        std::string suffix = s.detail.empty() ? std::string() : " " + s.detail;
        if (s.failure) {
            out.passed = false;
            out.counterexample = *s.failure;
            out.lines.push_back("FAIL n=" + std::to_string(n) + " counterexample=" + *s.failure + suffix);
            break;
        }
        out.lines.push_back("PASS n=" + std::to_string(n) + suffix);
    }
    return out;
}

} // namespace pnlab::verify
