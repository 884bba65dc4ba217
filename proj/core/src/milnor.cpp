#include "thetalab/milnor.hpp"

#include <numeric>

#include "thetalab/error.hpp"

namespace thetalab {

MilnorAlgebra::MilnorAlgebra(const Poly& f) : f_(f), jacobian_(jacobian_ideal(f)) {
  std::vector<Poly> nonzero;
  for (const Poly& g : jacobian_) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) throw Error(ErrorCode::NonIsolated, "f has a vanishing gradient");
  sb_ = std_basis(std::span<const Poly>(nonzero));
  if (!sb_.length().finite()) throw Error(ErrorCode::NonIsolated, "Jacobian ideal has infinite colength");
  for (const ModuleMonomial& m : sb_.length().standard_monomials) basis_.push_back(m.monomial);
}

Poly MilnorAlgebra::normal_form(const Poly& g) const { return sb_.reduce(VecPoly::scalar(g))[0]; }

std::vector<Rational> MilnorAlgebra::coordinates(const Poly& g) const { return sb_.coordinates(VecPoly::scalar(g)); }

bool MilnorAlgebra::in_jacobian_ideal(const Poly& g) const { return sb_.contains(VecPoly::scalar(g)); }

MilnorAlgebra milnor_algebra(const Poly& f) { return MilnorAlgebra(f); }

Poly series_inverse(const Poly& u, int max_degree) {
  const Rational u0 = u.constant_term();
  if (u0 == 0) throw Error(ErrorCode::NotInModule, "series inverse of a non-unit");
  const std::size_t nvars = u.nvars();
  // u = u0 (1 - e) with e in the maximal ideal; 1/u = (1/u0) sum e^k.
  Poly e = Poly::constant(nvars, Rational(1)) - Rational(1 / u0) * u;
  Poly sum = Poly::constant(nvars, Rational(1));
  Poly power = sum;
  for (int k = 1; k <= max_degree; ++k) {
    power = (power * e).truncated(max_degree);
    if (power.is_zero()) break;
    sum += power;
  }
  return Rational(1 / u0) * sum;
}

ResidueData residue_functional(const MilnorAlgebra& alg, std::optional<std::vector<int>> exponents) {
  const std::size_t n = alg.nvars();
  ResidueData data;
  if (exponents) {
    if (exponents->size() != n) throw Error(ErrorCode::RankMismatch, "exponent vector of wrong length");
    data.a = *exponents;
    for (std::size_t i = 0; i < n; ++i) {
      if (data.a[i] < 1 || !alg.in_jacobian_ideal(Poly::term(Monomial::variable(n, i, data.a[i]), Rational(1)))) {
        throw Error(ErrorCode::NotInModule, "x_" + std::to_string(i + 1) + "^a is not in the Jacobian ideal");
      }
    }
  } else {
    data.a.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int k = 1;
      while (!alg.in_jacobian_ideal(Poly::term(Monomial::variable(n, i, k), Rational(1)))) ++k;
      data.a[i] = k;
    }
  }

  const std::vector<VecPoly> jac = as_vectors(alg.jacobian());
  data.c_num = PolyMatrix(n, n, n);
  data.detc_den = Poly::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    const LiftResult l = lift(VecPoly::scalar(Poly::term(Monomial::variable(n, i, data.a[i]), Rational(1))), jac);
    for (std::size_t j = 0; j < n; ++j) data.c_num(i, j) = l.numerators[j];
    data.c_den.push_back(l.denominator);
    data.detc_den = data.detc_den * l.denominator;
  }
  data.detc_num = data.c_num.determinant();

  for (const Monomial& b : alg.basis()) data.values.push_back(residue_by_expansion(data, Poly::term(b, Rational(1))));
  return data;
}

Rational residue_by_expansion(const ResidueData& data, const Poly& g) {
  const std::size_t n = data.a.size();
  std::vector<int> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = data.a[i] - 1;
  const int top = std::accumulate(target.begin(), target.end(), 0);
  const Poly num = (g.truncated(top) * data.detc_num.truncated(top)).truncated(top);
  const Poly series = (num * series_inverse(data.detc_den, top)).truncated(top);
  return series.coefficient(Monomial(std::move(target)));
}

Rational residue(const MilnorAlgebra& alg, const ResidueData& data, const Poly& g) {
  const std::vector<Rational> coords = alg.coordinates(g);
  Rational sum = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) sum += coords[i] * data.values[i];
  return sum;
}

QMatrix residue_pairing_matrix(const MilnorAlgebra& alg, const ResidueData& data) {
  const std::size_t mu = alg.mu();
  QMatrix m(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t j = i; j < mu; ++j) {
      const Rational v = residue(alg, data, Poly::term(alg.basis()[i] * alg.basis()[j], Rational(1)));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

}  // namespace thetalab
