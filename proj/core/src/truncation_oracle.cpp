#include "thetalab/truncation_oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "thetalab/error.hpp"

namespace thetalab::oracle {
namespace {

using SparseVec = std::map<std::size_t, Rational>;

// Coordinates of (P/m^level)^rank: index = component * #monomials + monomial index,
// monomials enumerated by increasing degree.
class TruncatedSpace {
 public:
  TruncatedSpace(std::size_t nvars, std::size_t rank, int level) : nvars_(nvars), rank_(rank), level_(level) {
    for (int d = 0; d < level; ++d) enumerate_degree(d);
  }

  std::size_t dim() const { return rank_ * monos_.size(); }
  std::size_t num_monomials() const { return monos_.size(); }
  int level() const { return level_; }
  const Monomial& monomial(std::size_t mono_idx) const { return monos_[mono_idx]; }
  std::size_t component_of(std::size_t idx) const { return idx / monos_.size(); }
  const Monomial& monomial_of(std::size_t idx) const { return monos_[idx % monos_.size()]; }

  std::optional<std::size_t> index(std::size_t comp, const Monomial& m) const {
    if (m.degree() >= level_) return std::nullopt;
    return comp * monos_.size() + mono_index_.at(m);
  }

  SparseVec embed(const VecPoly& v) const {
    SparseVec out;
    for (std::size_t c = 0; c < v.rank(); ++c) {
      for (const auto& [m, coef] : v[c].terms()) {
        if (auto idx = index(c, m)) out[*idx] += coef;
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  VecPoly basis_vector(std::size_t idx) const {
    VecPoly v(rank_, nvars_);
    v[component_of(idx)] = Poly::term(monomial_of(idx), Rational(1));
    return v;
  }

 private:
  void enumerate_degree(int d) {
    Monomial m(nvars_);
    recurse(m, 0, d);
  }
  void recurse(Monomial& m, std::size_t var, int remaining) {
    if (var + 1 == nvars_ || nvars_ == 0) {
      if (nvars_ != 0) m.set(var, remaining);
      mono_index_.emplace(m, monos_.size());
      monos_.push_back(m);
      if (nvars_ != 0) m.set(var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.set(var, e);
      recurse(m, var + 1, remaining - e);
    }
    m.set(var, 0);
  }

  std::size_t nvars_;
  std::size_t rank_;
  int level_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t> mono_index_;
};

// Row echelon form keyed by pivot (smallest index of each row).
class Echelon {
 public:
  SparseVec reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::size_t key = it->first;
      const Rational c = it->second;
      for (const auto& [j, a] : row->second) {
        Rational& slot = v[j];
        slot -= c * a;
        if (slot == 0 && j != key) v.erase(j);
      }
      v.erase(key);
      it = v.upper_bound(key);
    }
    return v;
  }

  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const std::size_t pivot = r.begin()->first;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [j, a] : r) a *= inv;
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t idx) const { return rows_.contains(idx); }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

void add_truncated_span(Echelon& ech, const TruncatedSpace& space, std::span<const VecPoly> gens) {
  for (const VecPoly& g : gens) {
    if (g.is_zero()) continue;
    int ord = -1;
    for (std::size_t c = 0; c < g.rank(); ++c) {
      const int o = g[c].order();
      if (o >= 0 && (ord < 0 || o < ord)) ord = o;
    }
    for (std::size_t k = 0; k < space.num_monomials(); ++k) {
      const Monomial& beta = space.monomial(k);
      if (beta.degree() + ord >= space.level()) break;  // monomials are sorted by degree
      ech.insert(space.embed(g.mul_term(beta, Rational(1))));
    }
  }
}

// dim (ker(kmap) + m^K) / (im(imap) + m^K) on N^m, N presented by rel.
std::size_t truncated_homology(const PolyMatrix& kmap, const PolyMatrix& imap, const PolyMatrix& rel, int level,
                               int slack) {
  const std::size_t m = kmap.rows();
  const std::size_t nvars = kmap.nvars() != 0 ? kmap.nvars() : rel.nvars();
  const std::vector<VecPoly> rel_cols = rel.columns();

  const TruncatedSpace deep(nvars, m, level + slack);
  Echelon deep_rel;
  add_truncated_span(deep_rel, deep, rel_cols);
  std::vector<std::size_t> free_idx;
  std::map<std::size_t, std::size_t> free_pos;
  for (std::size_t i = 0; i < deep.dim(); ++i) {
    if (deep_rel.is_pivot(i)) continue;
    free_pos.emplace(i, free_idx.size());
    free_idx.push_back(i);
  }
  const std::size_t d = free_idx.size();
  QMatrix action(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    const SparseVec img = deep_rel.reduce(deep.embed(kmap.apply(deep.basis_vector(free_idx[col]))));
    for (const auto& [idx, c] : img) action(free_pos.at(idx), col) = c;
  }
  const auto kernel = action.kernel();

  const TruncatedSpace shallow(nvars, m, level);
  Echelon shallow_rel;
  add_truncated_span(shallow_rel, shallow, rel_cols);
  Echelon span;
  for (std::size_t i : free_idx) {
    const VecPoly e = deep.basis_vector(i);
    if (deep.monomial_of(i).degree() >= level) continue;
    span.insert(shallow_rel.reduce(shallow.embed(imap.apply(e))));
  }
  const std::size_t image_rank = span.rank();
  for (const auto& vec : kernel) {
    SparseVec proj;
    for (std::size_t pos = 0; pos < d; ++pos) {
      if (vec[pos] == 0) continue;
      const std::size_t idx = free_idx[pos];
      if (auto s = shallow.index(deep.component_of(idx), deep.monomial_of(idx))) proj[*s] += vec[pos];
    }
    span.insert(shallow_rel.reduce(std::move(proj)));
  }
  return span.rank() - image_rank;
}

}  // namespace

int default_level(int max_generator_degree) { return 2 * std::max(max_generator_degree, 1) + 4; }

std::size_t truncated_length(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars, int level) {
  const TruncatedSpace space(nvars, rank, level);
  Echelon ech;
  add_truncated_span(ech, space, gens);
  return space.dim() - ech.rank();
}

bool truncated_member(const VecPoly& v, std::span<const VecPoly> gens, int level) {
  const TruncatedSpace space(v.nvars(), v.rank(), level);
  Echelon ech;
  add_truncated_span(ech, space, gens);
  return ech.reduce(space.embed(v)).empty();
}

TorLengths truncated_tor_lengths(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& presentation, int level,
                                 int slack) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::RankMismatch, "matrix factorization must be a pair of square matrices of equal size");
  }
  const std::size_t p = a.rows();
  const std::size_t r = presentation.rows();
  const PolyMatrix abar = a.kron_identity(r);
  const PolyMatrix bbar = b.kron_identity(r);
  const PolyMatrix rel = presentation.repeat_diagonal(p);
  TorLengths out;
  // coker(A) is resolved by ... -A-> R^p -B-> R^p -A-> R^p.
  out.odd = truncated_homology(abar, bbar, rel, level, slack);
  out.even = truncated_homology(bbar, abar, rel, level, slack);
  return out;
}

std::optional<std::size_t> stable_length(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars) {
  int deg = 0;
  for (const VecPoly& g : gens) deg = std::max(deg, g.degree());
  const int k = default_level(deg);
  const std::size_t a = truncated_length(gens, rank, nvars, k);
  if (a != truncated_length(gens, rank, nvars, k + 1)) return std::nullopt;
  return a;
}

std::optional<TorLengths> stable_tor_lengths(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& presentation) {
  const int deg = std::max({a.max_degree(), b.max_degree(), presentation.max_degree()});
  const int k = default_level(deg);
  const int slack = 2 * deg + 2;
  const TorLengths lo = truncated_tor_lengths(a, b, presentation, k, slack);
  if (lo != truncated_tor_lengths(a, b, presentation, k + 1, slack)) return std::nullopt;
  return lo;
}

}  // namespace thetalab::oracle
