#include "thetalab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thetalab/error.hpp"

namespace thetalab {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw Error(ErrorCode::IndexOutOfRange, "negative exponent");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power) {
  Monomial m(nvars);
  m.exps_.at(i) = power;
  return m;
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(i));
  Poly p(nvars);
  p.add_term(Monomial::variable(nvars, i), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  // Lexicographic storage puts the all-zero exponent vector first.
  const auto& [m, c] = *terms_.begin();
  return m.is_one() ? c : Rational(0);
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::RankMismatch, "evaluation point has the wrong dimension");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.nvars() != nvars_) {
    if (nvars_ == 0 && terms_.empty()) {
      nvars_ = m.nvars();
    } else {
      throw Error(ErrorCode::RingMismatch, "monomial has wrong number of variables");
    }
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::order() const noexcept {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(nvars_, Rational(1));
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly Poly::partial(std::size_t i) const {
  if (i >= nvars_) throw Error(ErrorCode::IndexOutOfRange, "partial derivative index " + std::to_string(i));
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d.set(i, m[i] - 1);
    r.add_term(d, c * m[i]);
  }
  return r;
}

void Poly::adopt_ring(const Poly& other) {
  if (nvars_ == other.nvars_) return;
  if (nvars_ == 0 && terms_.empty()) {
    nvars_ = other.nvars_;
  } else if (!(other.nvars_ == 0 && other.terms_.empty())) {
    throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  adopt_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  adopt_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, cc] : terms_) cc *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  r.adopt_ring(b);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

bool Poly::operator==(const Poly& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Poly partial(const Poly& f, std::size_t i) { return f.partial(i); }

std::vector<Poly> jacobian_ideal(const Poly& f) {
  std::vector<Poly> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.partial(i));
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Poly& p, std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  if (vars.size() < p.nvars()) throw Error(ErrorCode::RingMismatch, "not enough variable names");
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || mag != 1) {
      out << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << vars[i];
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::IndexOutOfRange, "division by the zero polynomial");
  // Lexicographic leading terms: the last entry of the term map.
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  Poly rem = a;
  Poly q(a.nvars() != 0 ? a.nvars() : b.nvars());
  while (!rem.is_zero()) {
    const auto [m, c] = *rem.terms().rbegin();
    if (!lead_m.divides(m)) return std::nullopt;
    const Monomial shift = m / lead_m;
    const Rational factor = c / lead_c;
    q.add_term(shift, factor);
    rem -= b.mul_term(shift, factor);
  }
  return q;
}

}  // namespace thetalab
