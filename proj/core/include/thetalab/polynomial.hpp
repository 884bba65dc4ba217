#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thetalab/rational.hpp"

namespace thetalab {

/// Exponent vector x_0^{e_0} ... x_n^{e_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e) { exps_[i] = e; }
  std::span<const int> exponents() const noexcept { return exps_; }

  int degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Lexicographic on exponent vectors; this is the storage order only.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Sparse polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Minimal total degree; -1 for the zero polynomial.
  int order() const noexcept;
  /// Terms of total degree <= max_degree.
  Poly truncated(int max_degree) const;

  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;
  Poly partial(std::size_t i) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& other) const;

 private:
  void adopt_ring(const Poly& other);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Formal partial derivative with respect to variable i.
Poly partial(const Poly& f, std::size_t i);

/// (d_0 f, ..., d_n f).
std::vector<Poly> jacobian_ideal(const Poly& f);

/// q with a = q * b when b divides a in the polynomial ring, else nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Default names x0, x1, ... for printing without a ring declaration.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Renders in the parser grammar, terms by decreasing degree then lex.
std::string to_string(const Poly& p, std::span<const std::string> vars);

}  // namespace thetalab
