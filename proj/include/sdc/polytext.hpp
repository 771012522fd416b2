#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/poly.hpp"

namespace sdc {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column "
                             + std::to_string(column_)),
          line(line_), column(column_)
    {
    }
};

/// Parse a polynomial with integer coefficients over the named variables.
/// Grammar (LL(1), whitespace insignificant, juxtaposition disallowed):
///   expr  := ['-'] term (('+'|'-') term)*
///   term  := power ('*' power)*
///   power := atom ['^' INT]
///   atom  := INT | VAR
/// `line` seeds the error position for diagnostics.
IntPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names,
                   int line = 1, int column_base = 1);

} // namespace sdc
