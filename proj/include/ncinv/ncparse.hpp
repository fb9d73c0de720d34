#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ncinv/ncpoly.hpp"

namespace ncinv {

// Text form of noncommutative polynomials used in configs and reports.
//
//   expr     := term { ('+' | '-') term }
//   term     := rational | [rational '*'] factor { '*' factor }
//   factor   := primary { '^' nat }
//   primary  := var | bracket | '(' expr ')'
//   bracket  := '[' expr { ',' expr } ']'      left-normed commutator
//   var      := 'x' nat                         1 <= nat <= max_variable
//   rational := ['-'] nat ['/' nat]
//
// Juxtaposition is not multiplication. Whitespace is ignored.
// Throws ParseError (with the byte offset) on malformed text.
NCPoly parse_ncpoly(std::string_view text, std::size_t max_variable);

// Canonical form: terms in descending deglex order, reduced fractions,
// maximal letter runs written with '^'. The zero polynomial is "0".
std::string format_ncpoly(const NCPoly& p);

std::string format_word(const Word& w);

}  // namespace ncinv
