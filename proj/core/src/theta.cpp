#include "thetalab/theta.hpp"

#include "thetalab/error.hpp"
#include "thetalab/parallel.hpp"
#include "thetalab/standard_basis.hpp"

namespace thetalab {
namespace {

std::vector<VecPoly> project(const std::vector<VecPoly>& vs, std::size_t count) {
  std::vector<VecPoly> out;
  for (const VecPoly& v : vs) {
    VecPoly head = v.slice(0, count);
    if (!head.is_zero()) out.push_back(std::move(head));
  }
  return out;
}

// Length of {v : kmap(v) in Rel} / (im(imap) + Rel) inside P^m.
std::size_t homology_length(const PolyMatrix& kmap, const PolyMatrix& imap, const PolyMatrix& rel, std::size_t nvars) {
  const std::size_t m = kmap.cols();
  const std::vector<VecPoly> kernel_gens =
      project(syzygies(kmap.hconcat(rel).columns(), kmap.rows(), nvars), m);

  std::vector<VecPoly> boundary = imap.hconcat(rel).columns();
  std::erase_if(boundary, [](const VecPoly& v) { return v.is_zero(); });
  const std::vector<VecPoly>& cycles = kernel_gens;
  if (cycles.empty()) return 0;

  const std::size_t t = cycles.size();
  const PolyMatrix kmat = PolyMatrix::from_columns(cycles, m, nvars);
  const PolyMatrix all = boundary.empty() ? kmat : kmat.hconcat(PolyMatrix::from_columns(boundary, m, nvars));
  const std::vector<VecPoly> rels = project(syzygies(all.columns(), m, nvars), t);
  const LengthResult len = length_of_quotient(std::span<const VecPoly>(rels), t, nvars);
  if (!len.finite()) throw Error(ErrorCode::InfiniteLength, "periodic Tor has infinite length");
  return *len.value;
}

}  // namespace

PeriodicTor periodic_tor_lengths(const MatrixFactorization& m, const ModulePresentation& n) {
  if (m.f() != n.f()) throw Error(ErrorCode::RingMismatch, "factorization and module over different f");
  const PolyMatrix q = minimalize_presentation(n.relations());
  const std::size_t r = q.rows();
  const std::size_t p = m.size();
  if (r == 0 || p == 0) return {};
  const std::size_t nvars = m.nvars();
  const PolyMatrix abar = m.a().kron_identity(r);
  const PolyMatrix bbar = m.b().kron_identity(r);
  const PolyMatrix rel = q.repeat_diagonal(p);
  PeriodicTor out;
  // coker(A) is resolved by ... -A-> P^p -B-> P^p -A-> P^p.
  out.odd = homology_length(abar, bbar, rel, nvars);
  out.even = homology_length(bbar, abar, rel, nvars);
  return out;
}

ThetaModule prepare_theta_module(const ModulePresentation& m) {
  ThetaModule out{m, std::nullopt, 0};
  try {
    const ExtractedFactorization ex = mf_from_module(m);
    out.factorization = ex.effective();
    out.syzygy_steps = ex.syzygy_steps;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FreeModule) throw;
  }
  return out;
}

std::optional<int> theta_sign_factor(std::size_t n) {
  if (n % 2 == 0) return std::nullopt;
  return ((n + 1) / 2) % 2 == 0 ? 1 : -1;
}

ThetaReport theta(const ThetaModule& m, const ModulePresentation& n) {
  ThetaReport report;
  const std::size_t nvars = m.presentation.nvars();
  report.n = nvars == 0 ? 0 : nvars - 1;
  report.sign_factor = theta_sign_factor(report.n);
  if (m.has_finite_projective_dimension()) {
    report.notes.push_back("FINITE_PROJECTIVE_DIMENSION: first module has no stable part, Theta = 0");
    return report;
  }
  const PeriodicTor tor = periodic_tor_lengths(*m.factorization, n);
  report.l_even = tor.even;
  report.l_odd = tor.odd;
  report.theta = static_cast<long>(tor.even) - static_cast<long>(tor.odd);
  return report;
}

ThetaReport theta(const ModulePresentation& m, const ModulePresentation& n) {
  return theta(prepare_theta_module(m), n);
}

PsdCertificate certify_psd(const QMatrix& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::RankMismatch, "PSD test needs a symmetric matrix");
  const std::size_t n = s.rows();
  QMatrix w = s;
  std::vector<bool> active(n, true);
  PsdCertificate cert;

  // Witness on the active block, then pulled back through the pivots.
  auto finish_with_witness = [&](std::vector<Rational> tail) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i]) v[i] = tail[i];
    }
    const std::size_t k = cert.pivot_order.size();
    if (k != 0) {
      QMatrix block(k, k);
      std::vector<Rational> rhs(k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) block(a, b) = s(cert.pivot_order[a], cert.pivot_order[b]);
        for (std::size_t j = 0; j < n; ++j) {
          if (active[j]) rhs[a] -= s(cert.pivot_order[a], j) * v[j];
        }
      }
      const auto y = block.solve(rhs);
      if (!y) throw Error(ErrorCode::Unsupported, "singular pivot block in PSD certificate");
      for (std::size_t a = 0; a < k; ++a) v[cert.pivot_order[a]] = (*y)[a];
    }
    if (quadratic_form(s, v) >= 0) throw Error(ErrorCode::Unsupported, "PSD witness failed to verify");
    cert.psd = false;
    cert.witness = std::move(v);
  };

  for (;;) {
    std::optional<std::size_t> best;
    std::optional<std::size_t> negative;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (!best || w(i, i) > w(*best, *best)) best = i;
      if (w(i, i) < 0 && !negative) negative = i;
    }
    if (!best) break;
    if (negative) {
      std::vector<Rational> tail(n);
      tail[*negative] = 1;
      finish_with_witness(std::move(tail));
      return cert;
    }
    const std::size_t piv = *best;
    if (w(piv, piv) == 0) {
      // All remaining diagonal entries vanish; any nonzero entry is fatal.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!active[i] || !active[j] || w(i, j) == 0) continue;
          std::vector<Rational> tail(n);
          tail[i] = 1;
          tail[j] = w(i, j) > 0 ? -1 : 1;
          finish_with_witness(std::move(tail));
          return cert;
        }
      }
      break;
    }
    const Rational d = w(piv, piv);
    cert.pivot_order.push_back(piv);
    cert.pivots.push_back(d);
    active[piv] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || w(i, piv) == 0) continue;
      const Rational li = w(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (active[j]) w(i, j) -= li * w(piv, j);
      }
    }
  }
  cert.psd = true;
  cert.rank = cert.pivots.size();
  return cert;
}

std::string to_string(PsdStatus s) {
  switch (s) {
    case PsdStatus::Psd:
      return "PSD";
    case PsdStatus::NotPsd:
      return "NOT_PSD";
    case PsdStatus::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

GramVerdict gram_from_prepared(std::span<const ThetaModule> modules, unsigned threads) {
  const std::size_t k = modules.size();
  GramVerdict out;
  out.g = QMatrix(k, k);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) cells.emplace_back(i, j);
  }
  std::vector<long> values(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t c) {
    values[c] = theta(modules[cells[c].first], modules[cells[c].second].presentation).theta;
  });
  for (std::size_t c = 0; c < cells.size(); ++c) {
    out.g(cells[c].first, cells[c].second) = values[c];
    out.g(cells[c].second, cells[c].first) = values[c];
  }
  const std::size_t nvars = k == 0 ? 0 : modules.front().presentation.nvars();
  const std::size_t n = nvars == 0 ? 0 : nvars - 1;
  const std::optional<int> sign = theta_sign_factor(n);
  if (!sign) {
    out.signed_g = out.g;
    out.status = PsdStatus::NotApplicable;
    out.notes.push_back("PARITY: n = " + std::to_string(n) + " is even; semidefiniteness is only asserted for odd n");
    return out;
  }
  out.signed_g = out.g * Rational(*sign);
  out.certificate = certify_psd(out.signed_g);
  out.status = out.certificate.psd ? PsdStatus::Psd : PsdStatus::NotPsd;
  return out;
}

GramVerdict gram(std::span<const ModulePresentation> modules, unsigned threads) {
  std::vector<ThetaModule> prepared(modules.size());
  parallel_for(modules.size(), threads, [&](std::size_t i) { prepared[i] = prepare_theta_module(modules[i]); });
  return gram_from_prepared(prepared, threads);
}

std::size_t intersection_multiplicity(const std::vector<Poly>& i, const std::vector<Poly>& j) {
  std::vector<Poly> both = i;
  both.insert(both.end(), j.begin(), j.end());
  std::size_t nvars = 0;
  for (const Poly& p : both) nvars = std::max(nvars, p.nvars());
  const LengthResult len = length_of_quotient(std::span<const Poly>(both), nvars);
  if (!len.finite()) throw Error(ErrorCode::NotProper, "V(I) and V(J) meet outside the origin");
  return *len.value;
}

Rational homogeneous_theta_formula(const Rational& d, const Rational& deg_y, const Rational& deg_z,
                                   const Rational& yz) {
  return Rational(-d * yz + deg_y * deg_z);
}

}  // namespace thetalab
