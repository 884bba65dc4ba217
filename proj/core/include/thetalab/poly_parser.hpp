#pragma once

#include <span>
#include <string>
#include <string_view>

#include "thetalab/polynomial.hpp"

namespace thetalab {

/// Recursive-descent parser for
///
///   expr     := term (('+'|'-') term)*
///   term     := ['+'|'-'] factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := var | rational | '(' expr ')'
///   var      := [a-zA-Z][a-zA-Z0-9_]*
///   rational := uint ('/' uint)?
///
/// Whitespace is ignored; juxtaposition ("2x", "x y") is rejected.
/// Throws ParseError (Syntax or UnknownVariable) with the offending offset.
Poly parse_poly(std::string_view text, std::span<const std::string> vars);

}  // namespace thetalab
