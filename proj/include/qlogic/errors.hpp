#pragma once

#include <stdexcept>
#include <string>

namespace qlogic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different ambient spaces.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Value cannot be represented in the workspace field Q(sqrt m) + i*Q(sqrt m).
struct FieldError : Error {
    using Error::Error;
};

// Malformed input text; line is 1-based, 0 when unknown.
struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

// A documented operation precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace qlogic
