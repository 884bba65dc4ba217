#pragma once

#include <vector>

#include "thetalab/poly_matrix.hpp"

namespace thetalab {

/// Square matrices A, B over P with A*B = B*A = f*I. Only mf_validate and the
/// operations below construct one, so the identity always holds.
class MatrixFactorization {
 public:
  MatrixFactorization() = default;

  const PolyMatrix& a() const noexcept { return a_; }
  const PolyMatrix& b() const noexcept { return b_; }
  const Poly& f() const noexcept { return f_; }
  std::size_t size() const noexcept { return a_.rows(); }
  std::size_t nvars() const noexcept { return f_.nvars(); }

  bool operator==(const MatrixFactorization&) const = default;

 private:
  friend MatrixFactorization mf_validate(PolyMatrix a, PolyMatrix b, const Poly& f);
  PolyMatrix a_;
  PolyMatrix b_;
  Poly f_;
};

/// Checks A*B = B*A = f*I and det(A)*det(B) = f^p. Throws NotAFactorization
/// naming the first offending entry.
MatrixFactorization mf_validate(PolyMatrix a, PolyMatrix b, const Poly& f);

/// Block-diagonal sum; an empty factorization (size 0) is the neutral element.
MatrixFactorization mf_direct_sum(const MatrixFactorization& m1, const MatrixFactorization& m2);

/// (A, B) -> (B, A).
MatrixFactorization mf_shift(const MatrixFactorization& m);

/// An R-module given over P by generators e_1..e_r and relation columns.
/// Construction enforces that f annihilates the cokernel.
class ModulePresentation {
 public:
  ModulePresentation() = default;
  /// Relations must already contain f*e_j in their span.
  ModulePresentation(PolyMatrix relations, const Poly& f);

  /// P / (gens) viewed as an R-module; f is appended as a relation when it is
  /// not already in the ideal.
  static ModulePresentation from_ideal(const std::vector<Poly>& gens, const Poly& f);
  /// coker(A) for a factorization.
  static ModulePresentation from_mf(const MatrixFactorization& m);

  const PolyMatrix& relations() const noexcept { return relations_; }
  const Poly& f() const noexcept { return f_; }
  std::size_t rank() const noexcept { return relations_.rows(); }
  std::size_t nvars() const noexcept { return f_.nvars(); }

 private:
  PolyMatrix relations_;
  Poly f_;
};

/// A factorization whose cokernel is the k-th syzygy of the input module.
struct ExtractedFactorization {
  MatrixFactorization mf;
  std::size_t syzygy_steps = 0;

  /// shift^k(mf): carries the same Theta values and Chern classes as the
  /// original module, because each syzygy step flips the parity of Tor.
  MatrixFactorization effective() const;
};

/// Repeated syzygies of a module presentation until the presentation over P
/// is square and injective, then B by lifting f*e_j through A. Throws
/// FreeModule when the module has finite projective dimension over R.
ExtractedFactorization mf_from_module(const ModulePresentation& m);

/// Removes unit entries by row/column operations and drops columns that lie
/// in the span of the remaining ones. The cokernel is unchanged.
PolyMatrix minimalize_presentation(const PolyMatrix& q);

}  // namespace thetalab
