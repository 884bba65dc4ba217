#include "thetalab/spectrum.hpp"

#include <algorithm>
#include <map>

#include "thetalab/error.hpp"

namespace thetalab {
namespace {

Rational weighted_degree(const Monomial& m, const QHWeights& w, int shift) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) s += (m[i] + shift) * w.w[i];
  return s;
}

Rational level_of(const Monomial& m, const QHWeights& w) { return weighted_degree(m, w, 1); }

// ceil of a rational, as a long
long ceil_of(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

}  // namespace

QHWeights validate_weights(const Poly& f, std::vector<Rational> w) {
  if (w.size() != f.nvars()) throw Error(ErrorCode::NotQuasiHomogeneous, "one weight per variable is required");
  for (const Rational& x : w) {
    if (x <= 0) throw Error(ErrorCode::NotQuasiHomogeneous, "weights must be positive");
  }
  QHWeights out{std::move(w)};
  for (const auto& [m, c] : f.terms()) {
    if (weighted_degree(m, out, 0) != 1) {
      throw Error(ErrorCode::NotQuasiHomogeneous, "term " + to_string(Poly::term(m, c), default_variable_names(m.nvars())) +
                                                      " has weight " + to_string(weighted_degree(m, out, 0)));
    }
  }
  return out;
}

long hodge_index(const Rational& level, std::size_t n) { return static_cast<long>(n) + 1 - ceil_of(level); }

std::vector<SpectrumEntry> spectrum(const MilnorAlgebra& alg, const QHWeights& w) {
  if (w.w.size() != alg.nvars()) throw Error(ErrorCode::NotQuasiHomogeneous, "weights do not match the ring");
  const std::size_t n = alg.nvars() - 1;
  std::vector<SpectrumEntry> out;
  for (std::size_t i = 0; i < alg.basis().size(); ++i) {
    SpectrumEntry e;
    e.basis_index = i;
    e.monomial = alg.basis()[i];
    e.level = level_of(e.monomial, w);
    e.lambda_one = e.level.get_den() == 1;
    e.hodge_p = hodge_index(e.level, n);
    e.ctilde_sign = e.hodge_p % 2 == 0 ? 1 : -1;
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.level < b.level; });
  return out;
}

OrthogonalityReport graded_orthogonality_check(const MilnorAlgebra& alg, const ResidueData& data, const QHWeights& w) {
  const QMatrix pairing = residue_pairing_matrix(alg, data);
  const std::vector<SpectrumEntry> spec = spectrum(alg, w);
  std::vector<Rational> levels(alg.mu());
  for (const SpectrumEntry& e : spec) levels[e.basis_index] = e.level;
  const Rational total(static_cast<long>(alg.nvars()));

  OrthogonalityReport report;
  for (std::size_t i = 0; i < alg.mu(); ++i) {
    for (std::size_t j = 0; j < alg.mu(); ++j) {
      if (pairing(i, j) != 0 && levels[i] + levels[j] != total) report.violations.emplace_back(i, j);
    }
  }
  std::map<Rational, std::vector<std::size_t>> by_level;
  for (std::size_t i = 0; i < alg.mu(); ++i) by_level[levels[i]].push_back(i);
  for (const auto& [lvl, rows] : by_level) {
    const auto partner = by_level.find(Rational(total - lvl));
    if (partner == by_level.end() || partner->second.size() != rows.size()) {
      report.degenerate_levels.push_back(lvl);
      continue;
    }
    QMatrix block(rows.size(), rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < rows.size(); ++b) block(a, b) = pairing(rows[a], partner->second[b]);
    }
    if (block.rank() != rows.size()) report.degenerate_levels.push_back(lvl);
  }
  return report;
}

QMatrix ctilde_twisted_pairing(const MilnorAlgebra& alg, const ResidueData& data, const QHWeights& w) {
  QMatrix m = residue_pairing_matrix(alg, data);
  const std::size_t n = alg.nvars() - 1;
  for (std::size_t j = 0; j < alg.mu(); ++j) {
    if (hodge_index(level_of(alg.basis()[j], w), n) % 2 == 0) continue;
    for (std::size_t i = 0; i < alg.mu(); ++i) m(i, j) = -m(i, j);
  }
  return m;
}

}  // namespace thetalab
