#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnlab {

/// Malformed textual input (word or ones-function).
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    /// 1-based position of the offending character.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called outside its documented domain.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested word length exceeds the configured enumeration limit.
class limit_exceeded : public std::runtime_error {
public:
    limit_exceeded(const std::string& what, std::size_t requested, std::size_t limit)
        : std::runtime_error(what), requested_(requested), limit_(limit) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

} // namespace pnlab
