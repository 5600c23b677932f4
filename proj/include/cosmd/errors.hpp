#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosmd {

// Malformed input: bad labels, self-loops, grammar violations, size bounds.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input lacks the (strong) connectivity an operation requires.
struct connectivity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error with byte offset into the offending text.
struct parse_error : input_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : input_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace cosmd
