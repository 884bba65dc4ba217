#include "thetalab/chern.hpp"

#include "thetalab/error.hpp"
#include "thetalab/parallel.hpp"

namespace thetalab {

ChernClasses chern_forms(const MatrixFactorization& m) {
  const std::size_t nvars = m.nvars();
  const std::size_t top = nvars / 2;
  const FormMatrix da = FormMatrix::differential(m.a());
  const FormMatrix db = FormMatrix::differential(m.b());
  const FormMatrix omega = da * db;
  const FormMatrix a_db = FormMatrix::functions(m.a()) * db;

  ChernClasses out;
  out.character = DiffForm(nvars);
  FormMatrix power;  // (dA ^ dB)^(i-1)
  Rational factorial = 1;
  for (std::size_t i = 1; i <= top; ++i) {
    out.eta.push_back(i == 1 ? a_db.trace() : (a_db * power).trace());
    power = i == 1 ? omega : power * omega;
    out.omega.push_back(power.trace());
    factorial *= static_cast<long>(i);
    out.character += Rational(1 / factorial) * out.omega.back();
  }
  return out;
}

Poly chern_top_class(const MatrixFactorization& m, const MilnorAlgebra& alg) {
  const std::size_t nvars = m.nvars();
  if (nvars % 2 != 0) throw Error(ErrorCode::Parity, "top Chern class needs an even number of variables");
  const ChernClasses ch = chern_forms(m);
  const DiffForm::Mask all = (DiffForm::Mask{1} << nvars) - 1;
  return alg.normal_form(ch.character.coefficient(all));
}

ThetaResidueComparison theta_vs_residue(std::span<const ThetaModule> modules, const MilnorAlgebra& alg,
                                        const ResidueData& data, unsigned threads) {
  const std::size_t nvars = alg.nvars();
  if (nvars % 2 != 0) throw Error(ErrorCode::Parity, "Theta vs residue needs an even number of variables");
  const std::size_t n = nvars - 1;
  const std::size_t k = modules.size();

  std::vector<Poly> classes(k, Poly(nvars));
  parallel_for(k, threads, [&](std::size_t i) {
    if (modules[i].factorization) classes[i] = chern_top_class(*modules[i].factorization, alg);
  });

  ThetaResidueComparison out;
  out.theta = gram_from_prepared(modules, threads).g;
  out.sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  out.residue = QMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.residue(i, j) = out.sign * residue(alg, data, classes[i] * classes[j]);
  }

  for (std::size_t i = 0; i < k && !out.scalar; ++i) {
    for (std::size_t j = 0; j < k && !out.scalar; ++j) {
      if (out.residue(i, j) != 0) out.scalar = Rational(out.theta(i, j) / out.residue(i, j));
    }
  }
  if (out.scalar) {
    out.consistent = out.theta == out.residue * *out.scalar;
  } else {
    out.degenerate = out.theta.is_zero();
    out.consistent = out.degenerate;
  }
  return out;
}

}  // namespace thetalab
