#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thetalab {

using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" and "p/q"; throws Error(Syntax) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace thetalab
