#pragma once

#include <optional>
#include <span>

#include "thetalab/poly_matrix.hpp"
#include "thetalab/vec_poly.hpp"

/// Second, independent route to lengths and homology: plain linear algebra
/// over Q in the finite-dimensional algebra P/m^K. Nothing here touches the
/// standard-basis engine; it exists to cross-check it.
namespace thetalab::oracle {

/// K = 2 * (max generator degree) + 4.
int default_level(int max_generator_degree);

/// dim_Q P^rank / (U + m^K P^rank) where U is generated by gens.
std::size_t truncated_length(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars, int level);

/// Whether v lies in U + m^K P^rank.
bool truncated_member(const VecPoly& v, std::span<const VecPoly> gens, int level);

struct TorLengths {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool operator==(const TorLengths&) const = default;
};

/// Stable Tor lengths of coker(A) against N = coker(presentation), computed
/// from the homology of the 2-periodic complex N^p -A-> N^p -B-> N^p truncated
/// at m^level; kernels are taken at the deeper level + slack and projected.
TorLengths truncated_tor_lengths(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& presentation, int level,
                                 int slack);

/// truncated_length at the default level and the next one; nullopt when
/// the two disagree (the truncation is not yet deep enough to be trusted).
std::optional<std::size_t> stable_length(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars);

/// Same for truncated_tor_lengths, with slack 2 * (max degree) + 2.
std::optional<TorLengths> stable_tor_lengths(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& presentation);

}  // namespace thetalab::oracle
