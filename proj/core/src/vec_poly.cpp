#include "thetalab/vec_poly.hpp"

#include <algorithm>

#include "thetalab/error.hpp"

namespace thetalab {

VecPoly::VecPoly(std::vector<Poly> components) : comps_(std::move(components)) {
  for (const Poly& p : comps_) {
    if (p.nvars() != 0) {
      nvars_ = p.nvars();
      break;
    }
  }
  for (Poly& p : comps_) {
    if (p.nvars() != nvars_) {
      if (!p.is_zero()) throw Error(ErrorCode::RingMismatch, "vector components live in different rings");
      p = Poly(nvars_);
    }
  }
}

VecPoly VecPoly::unit(std::size_t rank, std::size_t nvars, std::size_t i) {
  if (i >= rank) throw Error(ErrorCode::IndexOutOfRange, "unit vector index");
  VecPoly v(rank, nvars);
  v.comps_[i] = Poly::constant(nvars, Rational(1));
  return v;
}

bool VecPoly::is_zero() const noexcept {
  for (const Poly& p : comps_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

int VecPoly::degree() const noexcept {
  int d = -1;
  for (const Poly& p : comps_) d = std::max(d, p.degree());
  return d;
}

void VecPoly::check_rank(const VecPoly& other) const {
  if (rank() != other.rank()) {
    throw Error(ErrorCode::RankMismatch,
                "rank " + std::to_string(rank()) + " vs " + std::to_string(other.rank()));
  }
}

VecPoly& VecPoly::operator+=(const VecPoly& other) {
  check_rank(other);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += other.comps_[i];
  if (nvars_ == 0) nvars_ = other.nvars_;
  return *this;
}

VecPoly& VecPoly::operator-=(const VecPoly& other) {
  check_rank(other);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= other.comps_[i];
  if (nvars_ == 0) nvars_ = other.nvars_;
  return *this;
}

VecPoly VecPoly::operator-() const {
  VecPoly r(*this);
  for (Poly& p : r.comps_) p = -p;
  return r;
}

VecPoly VecPoly::mul_term(const Monomial& m, const Rational& c) const {
  VecPoly r(*this);
  for (Poly& p : r.comps_) p = p.mul_term(m, c);
  return r;
}

VecPoly VecPoly::concat(const VecPoly& tail) const {
  std::vector<Poly> all = comps_;
  all.insert(all.end(), tail.comps_.begin(), tail.comps_.end());
  VecPoly r(std::move(all));
  if (r.nvars_ == 0) r.nvars_ = nvars_ != 0 ? nvars_ : tail.nvars_;
  return r;
}

VecPoly VecPoly::slice(std::size_t begin, std::size_t count) const {
  if (begin + count > comps_.size()) throw Error(ErrorCode::IndexOutOfRange, "vector slice");
  VecPoly r(count, nvars_);
  for (std::size_t i = 0; i < count; ++i) r.comps_[i] = comps_[begin + i];
  return r;
}

VecPoly operator*(const Poly& p, const VecPoly& v) {
  VecPoly r(v);
  for (Poly& c : r.comps_) c = p * c;
  return r;
}

VecPoly operator*(const Rational& c, const VecPoly& v) {
  VecPoly r(v);
  for (Poly& p : r.comps_) p *= c;
  return r;
}

ModuleTerm ModuleOrder::leading_term(const VecPoly& v) const {
  std::size_t comp = v.rank();
  const Monomial* best = nullptr;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v[i].is_zero()) continue;
    if (global && best != nullptr) break;
    const Monomial& m = global ? std::ranges::max_element(v[i].terms(), [this](const auto& x, const auto& y) {
                                   return monomial_compare(x.first, y.first) == std::strong_ordering::less;
                                 })->first
                               : order.leading_monomial(v[i]);
    if (best == nullptr || order.greater(m, *best)) {
      best = &m;
      comp = i;
    }
  }
  if (best == nullptr) throw Error(ErrorCode::IndexOutOfRange, "leading term of the zero vector");
  return ModuleTerm{comp, *best, v[comp].coefficient(*best)};
}

std::strong_ordering ModuleOrder::compare(std::size_t ca, const Monomial& a, std::size_t cb,
                                          const Monomial& b) const {
  if (global) {
    if (ca != cb) return cb <=> ca;
    return monomial_compare(a, b);
  }
  const std::strong_ordering by_term = order.compare(a, b);
  if (by_term != std::strong_ordering::equal) return by_term;
  return cb <=> ca;
}

std::strong_ordering ModuleOrder::monomial_compare(const Monomial& a, const Monomial& b) const {
  if (global && a.degree() != b.degree()) return a.degree() <=> b.degree();
  return order.compare(a, b);
}

}  // namespace thetalab
