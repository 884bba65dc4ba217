#include "thetalab/local_order.hpp"

#include <algorithm>

#include "thetalab/error.hpp"

namespace thetalab {

LocalOrder::LocalOrder(std::vector<std::size_t> permutation) : perm_(std::move(permutation)) {
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorCode::IndexOutOfRange, "not a permutation of the variables");
  }
}

std::strong_ordering LocalOrder::compare(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return db <=> da;
  if (!perm_.empty() && perm_.size() != a.nvars()) {
    throw Error(ErrorCode::RingMismatch, "ordering permutation does not match the ring");
  }
  for (std::size_t pos = a.nvars(); pos-- > 0;) {
    const std::size_t v = position_to_var(pos);
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

const Monomial& LocalOrder::leading_monomial(const Poly& p) const {
  if (p.is_zero()) throw Error(ErrorCode::IndexOutOfRange, "leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (best == nullptr || greater(m, *best)) best = &m;
  }
  return *best;
}

}  // namespace thetalab
