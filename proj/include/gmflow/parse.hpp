// Text grammar for polynomials and canonical printing.
//
//   poly   := ['-'] term ( ('+'|'-') term )*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   coeff  := nat ('/' nat)?
//   var    := 'x' nat            (1-indexed)
//
// Whitespace is ignored between tokens.  When `parameter_s` is set, the
// token "s" names the last variable (used by one-parameter families).
#ifndef GMFLOW_PARSE_HPP
#define GMFLOW_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "gmflow/polynomial.hpp"

namespace gmflow {

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

Polynomial parse_polynomial(std::string_view text, std::size_t nvars,
                            bool parameter_s = false);

/// Canonical form: terms in descending grevlex, coefficient 1 elided except
/// on the constant term.  parse(print(p)) == p.
std::string to_string(const Polynomial& p, bool parameter_s = false);

std::string to_string(const Monomial& m, bool parameter_s = false);

}  // namespace gmflow

#endif
