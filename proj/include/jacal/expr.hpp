// expr.hpp - parser for polynomial coefficient expressions.
//
// Grammar (whitespace-insensitive):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' nat)?
//   atom     := rational | identifier | '(' expr ')' | '-' factor
//   rational := integer ('/' integer)?
// Identifiers must be coordinate names of the chart. '/' occurs only inside
// rational literals; exponents are nonnegative integers.
#pragma once

#include "jacal/poly.hpp"

#include <stdexcept>
#include <string>

namespace jacal {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
    std::size_t position;  // 0-based offset into the input
};

// Parses `text` over the chart `vars`. Throws ParseError on malformed input
// or unknown identifiers.
Poly parse_poly(const std::string& text, const Vars& vars);

}  // namespace jacal
