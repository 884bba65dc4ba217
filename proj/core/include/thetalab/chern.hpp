#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thetalab/diff_form.hpp"
#include "thetalab/matrix_factorization.hpp"
#include "thetalab/milnor.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

struct ChernClasses {
  /// omega[i - 1] = tr((dA ^ dB)^i), i = 1 .. floor(nvars / 2).
  std::vector<DiffForm> omega;
  /// eta[i] = tr(A dB (dA ^ dB)^i), i = 0 .. floor(nvars / 2) - 1.
  std::vector<DiffForm> eta;
  /// sum_i omega^i / i!, the assembled character without its rank term.
  DiffForm character;
};

ChernClasses chern_forms(const MatrixFactorization& m);

/// Class g in A_f (normal form) with top part of the character equal to
/// g dx_0 ^ ... ^ dx_n modulo df ^ Omega^n. Throws Parity for an odd number
/// of variables.
Poly chern_top_class(const MatrixFactorization& m, const MilnorAlgebra& alg);

struct ThetaResidueComparison {
  QMatrix theta;
  /// sign * res(ch_i ch_j) with sign = (-1)^(n(n-1)/2).
  QMatrix residue;
  int sign = 1;
  /// T = scalar * R, fitted from the first nonzero entry of R.
  std::optional<Rational> scalar;
  bool consistent = false;
  /// Both matrices vanish, so no scalar is determined.
  bool degenerate = false;
};

/// Modules with finite projective dimension contribute the zero class.
ThetaResidueComparison theta_vs_residue(std::span<const ThetaModule> modules, const MilnorAlgebra& alg,
                                        const ResidueData& data, unsigned threads = 1);

}  // namespace thetalab
