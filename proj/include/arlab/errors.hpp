#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arlab {

/// Expression syntax error carrying the byte offset of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A theorem hypothesis or operation precondition does not hold for the
/// given inputs (dependence detected, zero sets not disjoint, ...).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs exceed a documented desk-scale limit of the implementation.
class DeskScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace arlab
