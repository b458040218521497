#pragma once

#include <stdexcept>
#include <string>

namespace ladist {

// Thrown when a cuspidal id is unknown, or registry data is inconsistent.
struct registry_error : std::runtime_error {
    explicit registry_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations on operation arguments.
struct argument_error : std::runtime_error {
    explicit argument_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter falls in a range the theory does not cover.
struct range_error : std::runtime_error {
    explicit range_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency condition that must hold by construction failed.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// Expression / input syntax errors, with a position for diagnostics.
struct parse_error : std::runtime_error {
    size_t position;
    std::string expected;
    parse_error(size_t pos, const std::string& expected_, const std::string& msg)
        : std::runtime_error(msg), position(pos), expected(expected_) {}
};

} // namespace ladist
