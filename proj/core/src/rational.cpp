#include "thetalab/rational.hpp"

#include <cctype>

#include "thetalab/error.hpp"

namespace thetalab {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t digits_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_begin) throw ParseError(ErrorCode::Syntax, "expected rational '" + s + "'", i);
  if (i < s.size() && s[i] == '/') {
    const std::size_t den_begin = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin) throw ParseError(ErrorCode::Syntax, "expected denominator in '" + s + "'", i);
  }
  if (i != s.size()) throw ParseError(ErrorCode::Syntax, "trailing characters in '" + s + "'", i);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError(ErrorCode::Syntax, "malformed rational '" + s + "'", 0);
  }
  if (q.get_den() == 0) throw ParseError(ErrorCode::Syntax, "zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

}  // namespace thetalab
