#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "thetalab/polynomial.hpp"

namespace thetalab {

/// Local monomial ordering: 1 is the largest monomial, so the leading term of
/// a polynomial is one of its lowest-degree terms. Only the negative degree
/// reverse lexicographic ordering (Singular's "ds") is provided; an optional
/// permutation decides which variable is "last" for the revlex tie-break.
class LocalOrder {
 public:
  enum class Kind { NegDegRevLex };

  LocalOrder() = default;
  /// permutation[k] = variable occupying position k.
  explicit LocalOrder(std::vector<std::size_t> permutation);

  Kind kind() const noexcept { return Kind::NegDegRevLex; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  /// greater means "comes first", i.e. is the larger monomial.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Leading monomial of a nonzero polynomial.
  const Monomial& leading_monomial(const Poly& p) const;

 private:
  std::size_t position_to_var(std::size_t pos) const { return perm_.empty() ? pos : perm_[pos]; }

  std::vector<std::size_t> perm_;
};

}  // namespace thetalab
