#pragma once

// Brute-force reference implementations. Everything here works on the textual
// form of a word and recounts factors letter by letter; none of it calls the
// packed-bit routines it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "collapse.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "normality.hpp"
#include "ones.hpp"
#include "word.hpp"

namespace pnlab::oracle {

namespace detail {

inline int ones_in(const std::string& s, std::size_t start, std::size_t length) {
    int count = 0;
    for (std::size_t i = start; i < start + length; ++i) count += s[i] == '1';
    return count;
}

inline std::vector<int> max_ones_text(const std::string& s) {
    std::vector<int> f(s.size() + 1, 0);
    for (std::size_t k = 1; k <= s.size(); ++k) {
        for (std::size_t start = 0; start + k <= s.size(); ++start) f[k] = std::max(f[k], ones_in(s, start, k));
    }
    return f;
}

inline std::vector<int> prefix_ones_text(const std::string& s) {
    std::vector<int> p(s.size() + 1, 0);
    for (std::size_t k = 1; k <= s.size(); ++k) p[k] = ones_in(s, 0, k);
    return p;
}

inline std::vector<int> suffix_ones_text(const std::string& s) {
    std::vector<int> p(s.size() + 1, 0);
    for (std::size_t k = 1; k <= s.size(); ++k) p[k] = ones_in(s, s.size() - k, k);
    return p;
}

inline std::string text_of(std::uint64_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if ((index >> (n - 1 - i)) & 1U) s[i] = '1';
    }
    return s;
}

inline ones_function to_function(const std::vector<int>& v) {
    return ones_function::from_values(std::vector<int>(v.begin() + 1, v.end()));
}

} // namespace detail

/// f_w by scanning every factor of every length.
inline ones_function brute_max_ones(const binary_word& w) {
    return detail::to_function(detail::max_ones_text(w.to_string()));
}

inline bool brute_is_prefix_normal(const binary_word& w) {
    const std::string s = w.to_string();
    return detail::max_ones_text(s) == detail::prefix_ones_text(s);
}

inline bool brute_is_suffix_normal(const binary_word& w) {
    const std::string s = w.to_string();
    return detail::max_ones_text(s) == detail::suffix_ones_text(s);
}

inline bool brute_is_pnpal(const binary_word& w) {
    const std::string s = w.to_string();
    return std::equal(s.begin(), s.end(), s.rbegin()) && brute_is_prefix_normal(w);
}

namespace detail {

// Words of length n bucketed by their maximum-ones function; each bucket is
// in increasing (lexicographic) order.
inline std::map<std::vector<int>, std::vector<std::string>> text_buckets(std::size_t n) {
    std::map<std::vector<int>, std::vector<std::string>> buckets;
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << n); ++index) {
        std::string s = text_of(index, n);
        buckets[max_ones_text(s)].push_back(std::move(s));
    }
    return buckets;
}

} // namespace detail

/// Groups all 2^n words by brute_max_ones. The npf and lr of each class are
/// found by scanning the members for the prefix and suffix normal one.
/// @throws std::logic_error if a class has no or several such members.
inline class_partition_result brute_class_partition(std::size_t n, const enumeration_limits& limits = {}) {
    check_limit(n, limits.oracle, "brute_class_partition");
    class_partition_result result;
    result.n = n;
    for (const auto& [f, members] : detail::text_buckets(n)) {
        pn_class c;
        int prefix_normal = 0;
        int suffix_normal = 0;
        for (const auto& s : members) {
            const binary_word w = parse_word(s);
            c.members.push_back(w);
            if (detail::prefix_ones_text(s) == f) c.npf = w, ++prefix_normal;
            if (detail::suffix_ones_text(s) == f) c.lr = w, ++suffix_normal;
        }
        if (prefix_normal != 1 || suffix_normal != 1) {
            throw std::logic_error("brute_class_partition: class without a unique prefix/suffix normal member");
        }
        c.size = members.size();
        result.classes.emplace(detail::to_function(f), std::move(c));
    }
    return result;
}

/// Least representatives of length n, taken literally as the lexicographic
/// minimum of each class, in lexicographic order.
inline std::vector<std::string> brute_least_representative_texts(std::size_t n, const enumeration_limits& limits = {}) {
    check_limit(n, limits.oracle, "brute_least_representatives");
    std::vector<std::string> lrs;
    for (const auto& [f, members] : detail::text_buckets(n)) lrs.push_back(members.front());
    std::sort(lrs.begin(), lrs.end());
    return lrs;
}

inline std::vector<binary_word> brute_least_representatives(std::size_t n, const enumeration_limits& limits = {}) {
    std::vector<binary_word> out;
    for (const auto& s : brute_least_representative_texts(n, limits)) out.push_back(parse_word(s));
    return out;
}

/// Groups the least representatives of length n by brute_max_ones(1·w).
inline std::vector<collapse_class> brute_collapse_partition(std::size_t n, const enumeration_limits& limits = {}) {
    check_limit(n, limits.collapse_oracle, "brute_collapse_partition");
    std::map<std::vector<int>, std::vector<std::string>> buckets;
    for (const auto& s : brute_least_representative_texts(n, limits)) {
        buckets[detail::max_ones_text("1" + s)].push_back(s);
    }
    std::vector<std::vector<std::string>> groups;
    for (auto& [f, members] : buckets) groups.push_back(std::move(members));
    std::sort(groups.begin(), groups.end()); // members are sorted, so this orders by minimum
    std::vector<collapse_class> classes;
    for (const auto& members : groups) {
        collapse_class c;
        c.n = n;
        for (const auto& s : members) c.members.push_back(parse_word(s));
        c.extender = c.members.front();
        const std::string extended = "1" + members.front();
        c.extends = detail::max_ones_text(extended) == detail::suffix_ones_text(extended);
        classes.push_back(std::move(c));
    }
    return classes;
}

/// 1-based start of the first length-k factor with exactly d ones.
/// @throws precondition_error if k > |w|.
inline std::optional<std::size_t> brute_jumbled_witness(const binary_word& w, std::size_t k, int d) {
    const std::string s = w.to_string();
    if (k > s.size()) throw precondition_error("brute_jumbled_query: factor length exceeds word length");
    if (k == 0) return d == 0 ? std::optional<std::size_t>(1) : std::nullopt;
    int count = detail::ones_in(s, 0, k);
    for (std::size_t start = 0;; ++start) {
        if (count == d) return start + 1;
        if (start + k >= s.size()) break;
        count += (s[start + k] == '1') - (s[start] == '1');
    }
    return std::nullopt;
}

inline bool brute_jumbled_query(const binary_word& w, std::size_t k, int d) {
    return brute_jumbled_witness(w, k, d).has_value();
}

} // namespace pnlab::oracle
