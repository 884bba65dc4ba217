#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thetalab/matrix_factorization.hpp"

// Randomized invariant suites shared by the property tests and the
// acceptance binary. Every suite is driven by a fixed seed.
namespace thetalab::props {

/// A hypersurface with an isolated singularity and a few factorizations of it.
struct Family {
  std::string name;
  std::vector<std::string> vars;
  Poly f;
  std::vector<MatrixFactorization> blocks;
  /// Weights making f quasi-homogeneous.
  std::vector<int> weights;
};

const std::vector<Family>& families();

/// Sum of one or two catalog blocks (each possibly shifted), conjugated by
/// random unipotent polynomial matrices so the entries look generic.
MatrixFactorization random_mf(std::mt19937& rng, const Family& fam);
/// P / (random quasi-homogeneous generators in m) made into an R-module.
/// Graded generators cannot carry a polynomial unit factor, which would make
/// the extracted factorization local-only.
ModulePresentation random_ideal_module(std::mt19937& rng, const Family& fam);
/// (x_1^{a_1}, ..., x_n^{a_n}) plus a random graded generator: finite length.
ModulePresentation random_artinian_module(std::mt19937& rng, const Family& fam);
/// Either of the first two kinds.
ModulePresentation random_module(std::mt19937& rng, const Family& fam);

struct Tally {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> violations;
  /// Generated inputs the pipeline rejected (for instance UNSUPPORTED).
  std::size_t rejected = 0;
};

/// Each theta suite keeps generating until `cases` inputs were accepted, with
/// at most twice that many attempts.
Tally theta_symmetry(std::uint32_t seed, std::size_t cases);
Tally theta_additivity(std::uint32_t seed, std::size_t cases);
Tally theta_vanishing(std::uint32_t seed, std::size_t cases);
Tally theta_shift_antisymmetry(std::uint32_t seed, std::size_t cases);
Tally residue_well_definedness(std::uint32_t seed, std::size_t cases);

}  // namespace thetalab::props
