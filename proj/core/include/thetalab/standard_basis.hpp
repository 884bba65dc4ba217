#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thetalab/vec_poly.hpp"

namespace thetalab {

/// Basis monomial x^m * e_component of a finite-length quotient.
struct ModuleMonomial {
  std::size_t component = 0;
  Monomial monomial;
  auto operator<=>(const ModuleMonomial&) const = default;
};

/// dim_Q of a quotient of P_loc^r; `value` is empty when the length is infinite.
struct LengthResult {
  std::optional<std::size_t> value;
  std::vector<ModuleMonomial> standard_monomials;

  bool finite() const noexcept { return value.has_value(); }
};

/// Standard basis of a submodule U of P^r with respect to the
/// position-over-term extension of a local order, computed by Mora's
/// tangent-cone algorithm. All membership and length questions are
/// answered for the localization at the origin.
class StdBasis {
 public:
  StdBasis() = default;
  StdBasis(std::vector<VecPoly> generators, std::size_t rank, std::size_t nvars, LocalOrder order);

  const std::vector<VecPoly>& generators() const noexcept { return gens_; }
  const std::vector<ModuleTerm>& leading_terms() const noexcept { return leads_; }
  const LocalOrder& order() const noexcept { return order_.order; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t nvars() const noexcept { return nvars_; }

  /// Mora weak normal form: zero iff v lies in U_loc.
  VecPoly normal_form(const VecPoly& v) const;
  bool contains(const VecPoly& v) const { return normal_form(v).is_zero(); }

  /// Length of P_loc^r / U_loc with its standard monomials.
  const LengthResult& length() const noexcept { return length_; }

  /// Unique representative of v modulo U_loc in the span of the standard
  /// monomials. Requires finite length (throws InfiniteLength otherwise).
  VecPoly reduce(const VecPoly& v) const;
  /// Coordinates of reduce(v) with respect to length().standard_monomials.
  std::vector<Rational> coordinates(const VecPoly& v) const;

 private:
  void compute_length();

  std::vector<VecPoly> gens_;
  std::vector<ModuleTerm> leads_;
  std::vector<int> ecarts_;
  ModuleOrder order_;
  std::size_t rank_ = 0;
  std::size_t nvars_ = 0;
  LengthResult length_;
  int truncation_degree_ = 0;
};

/// Mora weak normal form of v against an arbitrary generating list.
/// The result r satisfies u*v - r in <basis> for a unit u; r = 0 iff v lies in
/// the submodule generated by a standard basis.
VecPoly normal_form(const VecPoly& v, std::span<const VecPoly> basis, const LocalOrder& order = {});

/// Standard basis of the submodule generated by gens (all of one rank).
StdBasis std_basis(std::span<const VecPoly> gens, const LocalOrder& order = {});

/// Ideal convenience overloads (rank 1).
StdBasis std_basis(std::span<const Poly> gens, const LocalOrder& order = {});

/// dim_Q P_loc^rank / <gens>.
LengthResult length_of_quotient(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars);
LengthResult length_of_quotient(std::span<const Poly> gens, std::size_t nvars);

/// Generators of the module of relations s with sum s_i gens_i = 0 over P_loc.
/// Every returned vector is an exact polynomial relation.
std::vector<VecPoly> syzygies(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars);

/// target = sum (numerators_i / denominator) gens_i with denominator(0) = 1.
struct LiftResult {
  std::vector<Poly> numerators;
  Poly denominator;
};

/// Throws Error(NotInModule) when target is not in the submodule.
LiftResult lift(const VecPoly& target, std::span<const VecPoly> gens);

/// Columns of a generator list in rank-1 form.
std::vector<VecPoly> as_vectors(std::span<const Poly> polys);

}  // namespace thetalab
