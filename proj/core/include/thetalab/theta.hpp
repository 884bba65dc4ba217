#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thetalab/matrix_factorization.hpp"
#include "thetalab/rational_matrix.hpp"

namespace thetalab {

struct PeriodicTor {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool operator==(const PeriodicTor&) const = default;
};

/// Lengths of ker(B)/im(A) (even) and ker(A)/im(B) (odd) for the maps
/// induced by the factorization on N^p. Throws InfiniteLength when either
/// homology module has infinite length.
PeriodicTor periodic_tor_lengths(const MatrixFactorization& m, const ModulePresentation& n);

/// A module prepared for Theta: its presentation plus, unless it has finite
/// projective dimension, the factorization that stands in for it.
struct ThetaModule {
  ModulePresentation presentation;
  std::optional<MatrixFactorization> factorization;  // effective (parity-corrected)
  std::size_t syzygy_steps = 0;

  bool has_finite_projective_dimension() const noexcept { return !factorization.has_value(); }
};

ThetaModule prepare_theta_module(const ModulePresentation& m);

struct ThetaReport {
  std::size_t l_even = 0;
  std::size_t l_odd = 0;
  long theta = 0;
  /// Dimension of the hypersurface: number of variables minus one.
  std::size_t n = 0;
  /// (-1)^((n+1)/2), present for odd n only.
  std::optional<int> sign_factor;
  std::vector<std::string> notes;
};

/// (-1)^((n+1)/2) for odd n.
std::optional<int> theta_sign_factor(std::size_t n);

/// Theta(M, N) = l(Tor_even) - l(Tor_odd) in the stable range. The first
/// argument is turned into a factorization, the second stays a presentation.
ThetaReport theta(const ThetaModule& m, const ModulePresentation& n);
ThetaReport theta(const ModulePresentation& m, const ModulePresentation& n);

/// Outcome of an exact PSD test by symmetric pivoted LDL^T.
struct PsdCertificate {
  bool psd = false;
  /// Pivot indices in elimination order and the matching (positive) pivots.
  std::vector<std::size_t> pivot_order;
  std::vector<Rational> pivots;
  /// When not PSD: a vector v with v^T S v < 0.
  std::vector<Rational> witness;
  std::size_t rank = 0;
};

/// Largest remaining diagonal first; a negative diagonal or a nonzero entry
/// in an all-zero diagonal block produces a witness that is pulled back to
/// the original coordinates.
PsdCertificate certify_psd(const QMatrix& s);

enum class PsdStatus { Psd, NotPsd, NotApplicable };
std::string to_string(PsdStatus s);

struct GramVerdict {
  QMatrix g;
  QMatrix signed_g;
  PsdStatus status = PsdStatus::NotApplicable;
  PsdCertificate certificate;
  std::vector<std::string> notes;
};

/// Pairwise Theta matrix of the modules and, for odd n, a certified verdict
/// on (-1)^((n+1)/2) G. Entries are computed on up to `threads` workers.
GramVerdict gram(std::span<const ModulePresentation> modules, unsigned threads = 1);
GramVerdict gram_from_prepared(std::span<const ThetaModule> modules, unsigned threads = 1);

/// l(P / (I + J)); throws NotProper when the supports meet outside the origin.
std::size_t intersection_multiplicity(const std::vector<Poly>& i, const std::vector<Poly>& j);

/// -d * YZ + degY * degZ.
Rational homogeneous_theta_formula(const Rational& d, const Rational& deg_y, const Rational& deg_z,
                                   const Rational& yz);

}  // namespace thetalab
