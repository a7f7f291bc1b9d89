#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specwl {

// Bad caller input: malformed graphs, out-of-range arguments, violated
// preconditions. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input; `offset` is the byte position of the problem.
struct parse_error : input_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : input_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// A configured budget (tuple cap, formula node cap, census cap) was exceeded.
// Maps to CLI exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed. Indicates a bug in this library, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// A floating-point routine failed to converge.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace specwl
