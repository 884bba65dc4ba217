#pragma once

#include <vector>

#include "thetalab/milnor.hpp"

namespace thetalab {

/// Positive weights with sum_i a_i w_i = 1 for every monomial x^a of f.
struct QHWeights {
  std::vector<Rational> w;
};

/// Throws NotQuasiHomogeneous naming the first term that has the wrong weight.
QHWeights validate_weights(const Poly& f, std::vector<Rational> w);

struct SpectrumEntry {
  /// Index into MilnorAlgebra::basis().
  std::size_t basis_index = 0;
  Monomial monomial;
  /// sum_i (b_i + 1) w_i.
  Rational level;
  /// The monodromy eigenvalue exp(-2 pi i level) equals 1.
  bool lambda_one = false;
  /// n + 1 - ceil(level).
  long hodge_p = 0;
  /// (-1)^hodge_p.
  int ctilde_sign = 1;
};

/// Hodge index convention for a level: n + 1 - ceil(level).
long hodge_index(const Rational& level, std::size_t n);

/// One entry per basis monomial, sorted by level (ties keep basis order).
std::vector<SpectrumEntry> spectrum(const MilnorAlgebra& alg, const QHWeights& w);

struct OrthogonalityReport {
  /// Pairs (i, j) of basis indices with a nonzero pairing but
  /// level_i + level_j != n + 1.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  /// Levels whose pairing block against the complementary level is singular.
  std::vector<Rational> degenerate_levels;
  bool orthogonal() const noexcept { return violations.empty(); }
  bool blocks_nondegenerate() const noexcept { return degenerate_levels.empty(); }
  bool ok() const noexcept { return orthogonal() && blocks_nondegenerate(); }
};

OrthogonalityReport graded_orthogonality_check(const MilnorAlgebra& alg, const ResidueData& data, const QHWeights& w);

/// res(b_i, C b_j) with C acting on b_j by (-1)^p(b_j); basis order.
QMatrix ctilde_twisted_pairing(const MilnorAlgebra& alg, const ResidueData& data, const QHWeights& w);

}  // namespace thetalab
