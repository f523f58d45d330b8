#pragma once

// Command implementations behind tools/pnlab. Each writes its whole output to
// the given stream and returns the process exit code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "collapse.hpp"
#include "errors.hpp"
#include "jpm.hpp"
#include "normality.hpp"
#include "ones.hpp"
#include "oracle.hpp"
#include "palindromes.hpp"
#include "verify.hpp"
#include "word.hpp"

namespace pnlab::cli {

enum exit_code : int { ok = 0, counterexample = 1, usage = 2, limit = 3 };

struct context {
    run_options options{};
    bool oracle = false;
};

inline const std::vector<std::string>& sequence_names() {
    static const std::vector<std::string> names{"pn-count", "npal", "collapse-classes", "max-class-size"};
    return names;
}

inline std::uint64_t sequence_value(std::string_view name, std::size_t n, const context& ctx) {
    const auto& limits = ctx.options.limits;
    if (name == "pn-count") {
        return ctx.oracle ? oracle::brute_least_representatives(n, limits).size()
                          : enumerate_least_representatives(n, ctx.options).size();
    }
    if (name == "npal") {
        if (!ctx.oracle) return npal(n, ctx.options);
        check_limit(n, limits.oracle, "npal");
        std::uint64_t count = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            count += oracle::brute_is_pnpal(binary_word(bits, n));
        }
        return count;
    }
    if (name == "collapse-classes") {
        return ctx.oracle ? oracle::brute_collapse_partition(n, limits).size()
                          : collapse_classes(n, collapse_engine::band_search, ctx.options).size();
    }
    if (name == "max-class-size") {
        const auto partition = ctx.oracle ? oracle::brute_class_partition(n, limits) : class_partition(n, false, ctx.options);
        std::uint64_t largest = 0;
        for (const auto& [signature, c] : partition.classes) largest = std::max(largest, c.size);
        return largest;
    }
    throw precondition_error("unknown sequence: " + std::string(name));
}

/// CSV with header "n,value", or one JSON object per line.
inline int run_sequence(std::string_view name, std::size_t n_max, std::string_view format, const context& ctx,
                        std::ostream& out) {
    if (std::find(sequence_names().begin(), sequence_names().end(), name) == sequence_names().end()) {
        throw precondition_error("unknown sequence: " + std::string(name));
    }
    if (format != "csv" && format != "jsonl") throw precondition_error("unknown format: " + std::string(format));
    std::vector<std::uint64_t> values;
    for (std::size_t n = 1; n <= n_max; ++n) values.push_back(sequence_value(name, n, ctx));

    if (format == "csv") out << "n,value\n";
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (format == "csv") {
            out << n << ',' << values[n - 1] << '\n';
        } else {
            nlohmann::ordered_json record{{"name", name}, {"n", n}, {"value", values[n - 1]}};
            out << record.dump() << '\n';
        }
    }
    return ok;
}

inline int run_verify(std::string_view theorem, std::size_t n_max, const context& ctx, std::ostream& out) {
    const auto report = verify::run(theorem, n_max, ctx.options);
    for (const auto& line : report.lines) out << line << '\n';
    return report.passed ? ok : counterexample;
}

/// Report fields of `word`, in output order.
inline const std::vector<std::string>& word_actions() {
    static const std::vector<std::string> actions{"f",  "p",      "s",  "fbar", "sigma", "prefix-normal", "suffix-normal",
                                                  "npf", "lr",    "palindrome", "pnpal", "charfn", "pd", "pl",
                                                  "extends", "bound"};
    return actions;
}

namespace detail {

inline std::string yes_no(bool value) { return value ? "yes" : "no"; }

inline std::string word_text(const binary_word& w) { return w.empty() ? std::string("ε") : w.to_string(); }

inline std::string word_field(std::string_view action, const binary_word& w, const context& ctx) {
    using namespace pnlab::oracle;
    const ones_function f = ctx.oracle ? brute_max_ones(w) : max_ones(w);
    if (action == "f") return f.to_string();
    if (action == "p") return prefix_ones(w).to_string();
    if (action == "s") return suffix_ones(w).to_string();
    if (action == "fbar") return reverse_progress(f).to_string();
    if (action == "sigma") return std::to_string(sigma(f));
    if (action == "prefix-normal") return yes_no(ctx.oracle ? brute_is_prefix_normal(w) : is_prefix_normal(w));
    if (action == "suffix-normal") return yes_no(ctx.oracle ? brute_is_suffix_normal(w) : is_suffix_normal(w));
    if (action == "npf") return word_text(word_from_prefix_profile(f));
    if (action == "lr") return word_text(word_from_suffix_profile(f));
    if (action == "palindrome") return yes_no(is_palindrome(w));
    if (action == "pnpal") return yes_no(ctx.oracle ? brute_is_pnpal(w) : is_pnpal(w));
    if (action == "charfn") return yes_no(is_pnpal_by_charfn(w));
    if (action == "pd") return std::to_string(palindromic_distance(w));
    if (action == "pl") return w.empty() ? std::string("0") : std::to_string(palindromic_prefix_length(w));
    if (action == "extends") return is_least_representative(w) ? yes_no(extends_to_lr(w)) : std::string("n/a");
    if (action == "bound") {
        if (!is_least_representative(w) || !extends_to_lr(w) || 2 * w.size() > binary_word::max_length) return "n/a";
        return std::to_string(class_size_bound(w));
    }
    throw precondition_error("unknown word action: " + std::string(action));
}

} // namespace detail

/**
 * @brief Plain-text report on one word.
 *
 * A single requested action prints its bare value; several print
 * space-separated `key=value` pairs in the order of word_actions(). An empty
 * request prints every field on its own line.
 */
inline int run_word(std::string_view text, std::vector<std::string> actions, const context& ctx, std::ostream& out) {
    const binary_word w = parse_word(text);
    for (const auto& a : actions) {
        if (std::find(word_actions().begin(), word_actions().end(), a) == word_actions().end()) {
            throw precondition_error("unknown word action: " + a);
        }
    }
    if (actions.empty()) {
        for (const auto& a : word_actions()) out << a << '=' << detail::word_field(a, w, ctx) << '\n';
        return ok;
    }
    if (actions.size() == 1) {
        out << detail::word_field(actions.front(), w, ctx) << '\n';
        return ok;
    }
    bool first = true;
    for (const auto& a : word_actions()) {
        if (std::find(actions.begin(), actions.end(), a) == actions.end()) continue;
        out << (first ? "" : " ") << a << '=' << detail::word_field(a, w, ctx);
        first = false;
    }
    out << '\n';
    return ok;
}

/// lr, npf and pnpal print one word per line in lexicographic order; classes
/// prints one JSON object per class ordered by signature.
inline int run_enumerate(std::string_view kind, std::size_t n, const context& ctx, std::ostream& out) {
    const auto& limits = ctx.options.limits;
    auto print_words = [&](const std::vector<binary_word>& words) {
        for (const auto& w : words) out << detail::word_text(w) << '\n';
    };
    if (kind == "lr") {
        print_words(ctx.oracle ? oracle::brute_least_representatives(n, limits)
                               : enumerate_least_representatives(n, ctx.options));
    } else if (kind == "npf") {
        if (!ctx.oracle) {
            print_words(enumerate_prefix_normal_words(n, ctx.options));
        } else {
            auto words = oracle::brute_least_representatives(n, limits);
            for (auto& w : words) w = reverse(w);
            std::sort(words.begin(), words.end());
            print_words(words);
        }
    } else if (kind == "pnpal") {
        if (!ctx.oracle) {
            print_words(enumerate_pnpals(n, ctx.options).words);
        } else {
            check_limit(n, limits.oracle, "enumerate pnpal");
            std::vector<binary_word> words;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                if (oracle::brute_is_pnpal(binary_word(bits, n))) words.emplace_back(bits, n);
            }
            print_words(words);
        }
    } else if (kind == "classes") {
        const auto partition = ctx.oracle ? oracle::brute_class_partition(n, limits) : class_partition(n, false, ctx.options);
        for (const auto& [signature, c] : partition.classes) {
            nlohmann::ordered_json record{{"signature", signature.to_string()},
                                          {"npf", detail::word_text(c.npf)},
                                          {"lr", detail::word_text(c.lr)},
                                          {"size", c.size}};
            out << record.dump() << '\n';
        }
    } else {
        throw precondition_error("unknown enumeration: " + std::string(kind));
    }
    return ok;
}

/// One JSON object per collapse class: extender, members, size and the
/// class-size bound (null when the extender's 1-prepend is not an LR).
inline int run_collapse_classes(std::size_t n, collapse_engine engine, const context& ctx, std::ostream& out) {
    const auto classes = ctx.oracle ? oracle::brute_collapse_partition(n, ctx.options.limits)
                                    : collapse_classes(n, engine, ctx.options);
    for (const auto& c : classes) {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (const auto& w : c.members) members.push_back(detail::word_text(w));
        nlohmann::ordered_json record{{"extender", detail::word_text(c.extender)}, {"members", members}, {"size", c.size()}};
        if (c.extends && 2 * n <= binary_word::max_length) {
            record["bound"] = class_size_bound(c.extender);
        } else {
            record["bound"] = nullptr;
        }
        out << record.dump() << '\n';
    }
    return ok;
}

/// CSV of the index bounds for n = 2..n_max; `violations` lists the bounds
/// that fail at that n, or "none".
inline int run_bounds(std::size_t n_max, const context& ctx, std::ostream& out) {
    verify::count_cache cache(ctx.options);
    out << "n,lower,actual,upper_palcol,upper_remark_paper,upper_remark_corrected,violations\n";
    for (std::size_t n = 2; n <= n_max; ++n) {
        const long ell = cache.index(n);
        const long actual = cache.index(n + 1);
        const auto b = index_bounds(ell, cache.npal(n - 1), cache.npal(n + 1), cache.npal(n));
        std::vector<std::string> violations;
        if (b.lower > actual) violations.emplace_back("lower");
        if (!(actual <= b.upper_palcol)) violations.emplace_back("upper_palcol");
        if (actual > b.upper_remark_paper) violations.emplace_back("upper_remark_paper");
        if (actual > b.upper_remark_corrected) violations.emplace_back("upper_remark_corrected");
        std::string listed;
        for (const auto& v : violations) listed += (listed.empty() ? "" : ";") + v;
        out << n << ',' << b.lower << ',' << actual << ',' << b.upper_palcol.to_string() << ',' << b.upper_remark_paper
            << ',' << b.upper_remark_corrected << ',' << (listed.empty() ? "none" : listed) << '\n';
    }
    return ok;
}

/// "yes" or "no"; with `witness`, a yes is followed by the 1-based start of
/// the first matching factor.
inline int run_jpm(std::string_view text, std::size_t k, int d, bool witness, const context& ctx, std::ostream& out) {
    const binary_word w = parse_word(text);
    const bool found = ctx.oracle ? oracle::brute_jumbled_query(w, k, d) : query(build_index(w), k, d);
    out << detail::yes_no(found);
    if (found && witness) out << " position=" << *oracle::brute_jumbled_witness(w, k, d);
    out << '\n';
    return ok;
}

} // namespace pnlab::cli
