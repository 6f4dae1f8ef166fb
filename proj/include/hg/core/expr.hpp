#pragma once

#include <string>

#include "hg/core/scalar.hpp"

namespace hg {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' '-'? integer)?
//   atom   := integer | decimal | name | '(' expr ')'
//   name   := [a-z][a-z0-9_]*
// Throws Error(Parse) on malformed input.
Scalar parse_scalar(const std::string& text);

}  // namespace hg
