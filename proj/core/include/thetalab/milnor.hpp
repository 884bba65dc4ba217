#pragma once

#include <optional>
#include <vector>

#include "thetalab/poly_matrix.hpp"
#include "thetalab/rational_matrix.hpp"
#include "thetalab/standard_basis.hpp"

namespace thetalab {

/// A_f = P_loc / (df) with its standard-monomial basis.
class MilnorAlgebra {
 public:
  /// Throws NonIsolated when the Jacobian ideal has infinite colength.
  explicit MilnorAlgebra(const Poly& f);

  const Poly& f() const noexcept { return f_; }
  std::size_t nvars() const noexcept { return f_.nvars(); }
  std::size_t mu() const noexcept { return basis_.size(); }
  /// Standard monomials, 1 first.
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const std::vector<Poly>& jacobian() const noexcept { return jacobian_; }
  const StdBasis& jacobian_basis() const noexcept { return sb_; }

  /// Representative in the span of the basis monomials.
  Poly normal_form(const Poly& g) const;
  std::vector<Rational> coordinates(const Poly& g) const;
  bool in_jacobian_ideal(const Poly& g) const;

 private:
  Poly f_;
  std::vector<Poly> jacobian_;
  StdBasis sb_;
  std::vector<Monomial> basis_;
};

MilnorAlgebra milnor_algebra(const Poly& f);

/// Certificate for the residue by the transformation law:
/// x_i^{a_i} = sum_j (c_num(i, j) / c_den[i]) * d_j f, all denominators units.
struct ResidueData {
  std::vector<int> a;
  PolyMatrix c_num;
  std::vector<Poly> c_den;
  Poly detc_num;
  Poly detc_den;
  /// res(b) for each basis monomial of the algebra, in basis order.
  std::vector<Rational> values;
};

/// Finds the smallest a_i with x_i^{a_i} in (df), unless `exponents` is
/// supplied (each entry must then also give a member of (df)).
ResidueData residue_functional(const MilnorAlgebra& alg, std::optional<std::vector<int>> exponents = std::nullopt);

/// res(g) as the coefficient of x^{a-1} in g * det(c); no normal form involved.
Rational residue_by_expansion(const ResidueData& data, const Poly& g);

/// res(g) through the normal form of g and the tabulated basis values.
Rational residue(const MilnorAlgebra& alg, const ResidueData& data, const Poly& g);

/// <b_i, b_j> = res(b_i * b_j) over the basis.
QMatrix residue_pairing_matrix(const MilnorAlgebra& alg, const ResidueData& data);

/// Power series inverse of a unit u, truncated above `max_degree`.
Poly series_inverse(const Poly& u, int max_degree);

}  // namespace thetalab
