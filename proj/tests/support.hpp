#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <pnlab/ones.hpp>
#include <pnlab/word.hpp>

namespace pnlab {

inline void PrintTo(const binary_word& v, std::ostream* os) { *os << '"' << v.to_string() << '"'; }

inline void PrintTo(const ones_function& f, std::ostream* os) { *os << "f(0)=" << f(0) << " [" << f.to_string() << ']'; }

} // namespace pnlab

namespace pnlab::testing {

inline binary_word w(std::string_view text) { return parse_word(text); }

inline ones_function fn(std::string_view text) { return parse_ones_function(text); }

inline std::vector<binary_word> all_words(std::size_t n) {
    std::vector<binary_word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.emplace_back(bits, n);
    return out;
}

inline std::vector<std::string> texts(const std::vector<binary_word>& words) {
    std::vector<std::string> out;
    for (const auto& v : words) out.push_back(v.to_string());
    return out;
}

} // namespace pnlab::testing
