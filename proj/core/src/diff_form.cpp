#include "thetalab/diff_form.hpp"

#include <bit>

#include "thetalab/error.hpp"

namespace thetalab {
namespace {

// Sign of dx_I ^ dx_J rearranged into increasing order: one transposition per
// pair (i in I, j in J) with i > j.
int wedge_sign(DiffForm::Mask a, DiffForm::Mask b) {
  int swaps = 0;
  for (DiffForm::Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

int form_degree(DiffForm::Mask mask) { return std::popcount(mask); }

DiffForm::DiffForm(std::size_t nvars) : nvars_(nvars) {
  if (nvars > 32) throw Error(ErrorCode::Unsupported, "differential forms support at most 32 variables");
}

DiffForm DiffForm::function(const Poly& g) {
  DiffForm w(g.nvars());
  w.add(0, g);
  return w;
}

DiffForm DiffForm::dx(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::IndexOutOfRange, "dx index");
  DiffForm w(nvars);
  w.add(Mask{1} << i, Poly::constant(nvars, Rational(1)));
  return w;
}

DiffForm DiffForm::top(const Poly& g) {
  DiffForm w(g.nvars());
  const Mask all = g.nvars() == 32 ? ~Mask{0} : (Mask{1} << g.nvars()) - 1;
  w.add(all, g);
  return w;
}

Poly DiffForm::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

DiffForm DiffForm::component(int p) const {
  DiffForm w(nvars_);
  for (const auto& [mask, g] : terms_) {
    if (form_degree(mask) == p) w.terms_.emplace(mask, g);
  }
  return w;
}

void DiffForm::add(Mask mask, const Poly& g) {
  if (g.is_zero()) return;
  if (nvars_ == 0) nvars_ = g.nvars();
  auto [it, inserted] = terms_.try_emplace(mask, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffForm& DiffForm::operator+=(const DiffForm& other) {
  for (const auto& [mask, g] : other.terms_) add(mask, g);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& other) {
  for (const auto& [mask, g] : other.terms_) add(mask, -g);
  return *this;
}

DiffForm operator*(const Poly& g, const DiffForm& w) {
  DiffForm r(w.nvars_ != 0 ? w.nvars_ : g.nvars());
  if (g.is_zero()) return r;
  for (const auto& [mask, h] : w.terms_) r.add(mask, g * h);
  return r;
}

DiffForm operator*(const Rational& c, const DiffForm& w) {
  DiffForm r(w.nvars_);
  if (c == 0) return r;
  for (const auto& [mask, h] : w.terms_) r.add(mask, c * h);
  return r;
}

bool DiffForm::operator==(const DiffForm& other) const { return terms_ == other.terms_; }

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  DiffForm r(a.nvars() != 0 ? a.nvars() : b.nvars());
  for (const auto& [ma, ga] : a.terms()) {
    for (const auto& [mb, gb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      const Poly prod = ga * gb;
      r.add(ma | mb, wedge_sign(ma, mb) == 1 ? prod : -prod);
    }
  }
  return r;
}

DiffForm d(const DiffForm& w) {
  const std::size_t n = w.nvars();
  DiffForm r(n);
  for (const auto& [mask, g] : w.terms()) {
    for (std::size_t k = 0; k < n; ++k) {
      const DiffForm::Mask bit = DiffForm::Mask{1} << k;
      if ((mask & bit) != 0) continue;
      const Poly dg = partial(g, k);
      if (dg.is_zero()) continue;
      // dx_k ^ dx_I: move dx_k past the indices of I below k.
      r.add(mask | bit, wedge_sign(bit, mask) == 1 ? dg : -dg);
    }
  }
  return r;
}

std::string to_string(const DiffForm& w, std::span<const std::string> vars) {
  if (w.is_zero()) return "0";
  std::string out;
  auto append = [&out](const std::string& term) {
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  };
  for (const auto& [mask, g] : w.terms()) {
    std::string coef = to_string(g, vars);
    if (mask == 0) {
      append(g.size() > 1 ? "(" + coef + ")" : coef);
      continue;
    }
    if (g.terms().size() > 1) {
      coef = "(" + coef + ")";
    } else if (coef == "1") {
      coef.clear();
    } else if (coef == "-1") {
      coef = "-";
    }
    std::string basis;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if ((mask >> i & 1U) == 0) continue;
      basis += (basis.empty() ? "d" : "^d") + vars[i];
    }
    append(coef.empty() || coef == "-" ? coef + basis : coef + "*" + basis);
  }
  return out;
}

FormMatrix::FormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, DiffForm(nvars)) {}

FormMatrix FormMatrix::functions(const PolyMatrix& m) {
  FormMatrix r(m.rows(), m.cols(), m.nvars());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = DiffForm::function(m(i, j));
  }
  return r;
}

FormMatrix FormMatrix::differential(const PolyMatrix& m) {
  FormMatrix r(m.rows(), m.cols(), m.nvars());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      DiffForm w = DiffForm::function(m(i, j));
      r(i, j) = d(w);
    }
  }
  return r;
}

FormMatrix FormMatrix::operator*(const FormMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::RankMismatch, "form matrix product shape mismatch");
  FormMatrix r(rows_, other.cols_, nvars_ != 0 ? nvars_ : other.nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += wedge((*this)(i, k), other(k, j));
    }
  }
  return r;
}

DiffForm FormMatrix::trace() const {
  DiffForm t(nvars_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

}  // namespace thetalab
