#include "thetalab/poly_parser.hpp"

#include <cctype>

#include "thetalab/error.hpp"

namespace thetalab {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') break;
      ++pos_;
      Poly t = term();
      if (op == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  Poly term() {
    skip_ws();
    bool negate = false;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (at_end() || text_[pos_] != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    if (negate) acc = -acc;
    return acc;
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 6) fail_at("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip_ws();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", den_pos);
        num += "/" + den;
      }
      Rational q(num, 10);
      q.canonicalize();
      return Poly::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Poly::variable(vars_.size(), i);
      }
      throw ParseError(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'", start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(ErrorCode::Syntax, msg, at);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> vars) {
  return Parser(text, vars).parse();
}

}  // namespace thetalab
