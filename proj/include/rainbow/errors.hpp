#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Invalid argument or precondition violation (bad vertex, bad palette, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured budget (vertex cap, enumeration cap) would be exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Could not open / read / write a file.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed .ecg input; carries the 1-based offending line number.
class format_error : public std::runtime_error {
public:
    format_error(long line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

// An internal consistency check failed. Reaching this means either a bug
// or a falsified identity; the CLI maps it to a distinguished exit code.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace rainbow
