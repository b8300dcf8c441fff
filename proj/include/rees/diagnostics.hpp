#pragma once

#include <stdexcept>
#include <string>

namespace rees {

// Contract violations at the algebra level (wrong ring context, bad
// arguments, malformed inputs).
struct AlgebraError : std::runtime_error {
    explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

// A ring homomorphism whose well-definedness check failed: some source
// relation does not map to zero. The offending relation is reported.
struct IllDefinedMap : AlgebraError {
    explicit IllDefinedMap(const std::string& msg) : AlgebraError(msg) {}
};

// Script / polynomial text errors carry a position for diagnostics.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

} // namespace rees
