#pragma once

#include <vector>

#include "thetalab/local_order.hpp"
#include "thetalab/polynomial.hpp"

namespace thetalab {

/// Element of the free module P^r, stored as its r coordinate polynomials.
class VecPoly {
 public:
  VecPoly() = default;
  VecPoly(std::size_t rank, std::size_t nvars) : comps_(rank, Poly(nvars)), nvars_(nvars) {}
  explicit VecPoly(std::vector<Poly> components);

  static VecPoly unit(std::size_t rank, std::size_t nvars, std::size_t i);
  static VecPoly scalar(const Poly& p) { return VecPoly(std::vector<Poly>{p}); }

  std::size_t rank() const noexcept { return comps_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  Poly& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Poly>& components() const noexcept { return comps_; }

  bool is_zero() const noexcept;
  /// Maximal total degree over all terms; -1 for zero.
  int degree() const noexcept;

  VecPoly& operator+=(const VecPoly& other);
  VecPoly& operator-=(const VecPoly& other);
  VecPoly operator-() const;
  VecPoly mul_term(const Monomial& m, const Rational& c) const;
  /// Concatenation (u, v) in P^{r+s}.
  VecPoly concat(const VecPoly& tail) const;
  /// Components [begin, begin + count).
  VecPoly slice(std::size_t begin, std::size_t count) const;

  friend VecPoly operator+(VecPoly a, const VecPoly& b) { return a += b; }
  friend VecPoly operator-(VecPoly a, const VecPoly& b) { return a -= b; }
  friend VecPoly operator*(const Poly& p, const VecPoly& v);
  friend VecPoly operator*(const Rational& c, const VecPoly& v);

  bool operator==(const VecPoly& other) const { return comps_ == other.comps_; }

 private:
  void check_rank(const VecPoly& other) const;

  std::vector<Poly> comps_;
  std::size_t nvars_ = 0;
};

/// A term c * x^m * e_component of P^r.
struct ModuleTerm {
  std::size_t component = 0;
  Monomial monomial;
  Rational coefficient;
};

/// Term-over-position extension of a local order: monomials first, ties
/// broken by e_0 > e_1 > .... With `global` set it is position-over-term
/// with degree reverse lexicographic order inside a component, a
/// well-ordering for computations that commute with localization.
struct ModuleOrder {
  LocalOrder order;
  bool global = false;

  /// Leading term of a nonzero vector.
  ModuleTerm leading_term(const VecPoly& v) const;
  std::strong_ordering compare(std::size_t ca, const Monomial& a, std::size_t cb, const Monomial& b) const;
  std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b) const;
};

}  // namespace thetalab
