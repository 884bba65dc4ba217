#include "properties.hpp"

#include <algorithm>
#include <functional>

#include "../test_support.hpp"
#include "thetalab/error.hpp"
#include "thetalab/milnor.hpp"
#include "thetalab/poly_parser.hpp"
#include "thetalab/theta.hpp"

namespace thetalab::props {
namespace {

MatrixFactorization mf(const std::vector<std::vector<std::string>>& a, const std::vector<std::vector<std::string>>& b,
                       const Poly& f, const std::vector<std::string>& vars) {
  return mf_validate(PolyMatrix::parse(a, vars), PolyMatrix::parse(b, vars), f);
}

Family family(std::string name, std::vector<std::string> vars, const std::string& f,
              const std::vector<std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>>>&
                  blocks,
              std::vector<int> weights = {}) {
  if (weights.empty()) weights.assign(vars.size(), 1);
  Family fam{std::move(name), std::move(vars), Poly(), {}, std::move(weights)};
  fam.f = parse_poly(f, fam.vars);
  for (const auto& [a, b] : blocks) fam.blocks.push_back(mf(a, b, fam.f, fam.vars));
  return fam;
}

std::size_t pick(std::mt19937& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Random nonzero quasi-homogeneous element of the maximal ideal, of weighted
// degree between the smallest weight and the sum of the extreme weights.
Poly random_form(std::mt19937& rng, const Family& fam) {
  const std::size_t n = fam.vars.size();
  const int lo = *std::ranges::min_element(fam.weights);
  const int d = lo + static_cast<int>(pick(rng, static_cast<std::size_t>(*std::ranges::max_element(fam.weights)) + 1));
  std::vector<Monomial> monos;
  Monomial cur(n);
  // Odometer over exponent vectors of weighted degree <= d.
  for (;;) {
    int wdeg = 0;
    for (std::size_t i = 0; i < n; ++i) wdeg += fam.weights[i] * cur[i];
    if (wdeg == d) monos.push_back(cur);
    std::size_t v = 0;
    while (v < n) {
      cur.set(v, cur[v] + 1);
      int w = 0;
      for (std::size_t i = 0; i < n; ++i) w += fam.weights[i] * cur[i];
      if (w <= d) break;
      cur.set(v, 0);
      ++v;
    }
    if (v == n) break;
  }
  static constexpr int kCoeffs[] = {-3, -2, -1, 1, 2, 3};
  for (;;) {
    Poly g(n);
    for (const Monomial& m : monos) {
      if (pick(rng, 2) == 0) g.add_term(m, Rational(kCoeffs[pick(rng, 6)]));
    }
    if (!g.is_zero()) return g;
  }
}

// Elementary unipotent: identity plus one off-diagonal entry c or c*x_k with
// small integer c. Denser conjugations make the length computations explode
// without exercising anything new.
PolyMatrix random_unipotent(std::mt19937& rng, std::size_t p, std::size_t nvars, bool upper) {
  PolyMatrix u = PolyMatrix::identity(p, nvars);
  if (p < 2) return u;
  std::size_t i = pick(rng, p);
  std::size_t j = pick(rng, p - 1);
  if (j >= i) ++j;
  if (upper != (j > i)) std::swap(i, j);
  static constexpr int kCoeffs[] = {-2, -1, 1, 2};
  const Rational c(kCoeffs[pick(rng, 4)]);
  const std::size_t k = pick(rng, nvars + 1);
  u(i, j) = k == nvars ? Poly::constant(nvars, c) : c * Poly::variable(nvars, k);
  return u;
}

// (I + N)^{-1} = sum_k (-N)^k for nilpotent N.
PolyMatrix unipotent_inverse(const PolyMatrix& u) {
  const std::size_t p = u.rows();
  const PolyMatrix id = PolyMatrix::identity(p, u.nvars());
  const PolyMatrix minus_n = id - u;
  PolyMatrix sum = id;
  PolyMatrix power = id;
  for (std::size_t k = 1; k < p; ++k) {
    power = power * minus_n;
    sum = sum + power;
  }
  return sum;
}

struct Runner {
  Tally tally;
  std::mt19937 rng;

  Runner(std::string name, std::uint32_t seed) : rng(seed) { tally.name = std::move(name); }

  // Counts a case unless the library rejects the generated input.
  void run_case(const std::function<void()>& body) {
    try {
      body();
      ++tally.cases;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Unsupported) {
        ++tally.rejected;
      } else {
        ++tally.cases;
        tally.violations.push_back(std::string("unexpected error: ") + e.what());
      }
    }
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) tally.violations.push_back(what);
  }
};

long th(const ModulePresentation& m, const ModulePresentation& n) { return theta(m, n).theta; }

std::string describe(const Family& fam, const ModulePresentation& m) {
  return to_string(m.relations(), fam.vars);
}

}  // namespace

const std::vector<Family>& families() {
  static const std::vector<Family> fams = {
      family("node", {"x", "y"}, "x*y", {{{{"x"}}, {{"y"}}}}),
      family("cusp", {"x", "y"}, "x^2 + y^3", {{{{"x", "-y^2"}, {"y", "x"}}, {{"x", "y^2"}, {"-y", "x"}}}}, {3, 2}),
      family("three lines", {"x", "y"}, "x^3 + y^3", {{{{"x + y"}}, {{"x^2 - x*y + y^2"}}}}),
      family("D4", {"x", "y"}, "x^2*y - y^3",
             {{{{"y"}}, {{"x^2 - y^2"}}}, {{{"x - y"}}, {{"x*y + y^2"}}}, {{{"x + y"}}, {{"x*y - y^2"}}}}),
      family("cone", {"x", "y", "z"}, "x*y - z^2", {{{{"y", "-z"}, {"-z", "x"}}, {{"x", "z"}, {"z", "y"}}}}),
      family("quadric", {"x", "y", "z", "w"}, "x*y + z*w",
             {{{{"z", "y"}, {"-x", "w"}}, {{"w", "-y"}, {"x", "z"}}}}),
  };
  return fams;
}

MatrixFactorization random_mf(std::mt19937& rng, const Family& fam) {
  auto block = [&] {
    const MatrixFactorization& b = fam.blocks[pick(rng, fam.blocks.size())];
    return pick(rng, 2) == 0 ? b : mf_shift(b);
  };
  MatrixFactorization m = block();
  // Sums stay small in four variables, where lengths are costlier.
  if (fam.vars.size() < 4 && pick(rng, 3) == 0) m = mf_direct_sum(m, block());
  const std::size_t p = m.size();
  const std::size_t n = fam.vars.size();
  const PolyMatrix u = random_unipotent(rng, p, n, true);
  const PolyMatrix v = random_unipotent(rng, p, n, false);
  return mf_validate(u * m.a() * v, unipotent_inverse(v) * m.b() * unipotent_inverse(u), fam.f);
}

ModulePresentation random_ideal_module(std::mt19937& rng, const Family& fam) {
  const std::size_t n = fam.vars.size();
  std::vector<Poly> gens;
  const std::size_t k = 1 + pick(rng, n == 4 ? 2 : 3);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_form(rng, fam));
  return ModulePresentation::from_ideal(gens, fam.f);
}

ModulePresentation random_artinian_module(std::mt19937& rng, const Family& fam) {
  const std::size_t n = fam.vars.size();
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Poly::variable(n, i).pow(1 + static_cast<unsigned>(pick(rng, 2))));
  gens.push_back(random_form(rng, fam));
  return ModulePresentation::from_ideal(gens, fam.f);
}

ModulePresentation random_module(std::mt19937& rng, const Family& fam) {
  return pick(rng, 5) < 3 ? ModulePresentation::from_mf(random_mf(rng, fam)) : random_ideal_module(rng, fam);
}

Tally theta_symmetry(std::uint32_t seed, std::size_t cases) {
  Runner r("theta symmetry", seed);
  const auto& fams = families();
  for (std::size_t c = 0; r.tally.cases < cases && c < 2 * cases; ++c) {
    const Family& fam = fams[c % fams.size()];
    r.run_case([&] {
      const ModulePresentation m = random_module(r.rng, fam);
      const ModulePresentation n = random_module(r.rng, fam);
      const long a = th(m, n), b = th(n, m);
      r.expect(a == b, fam.name + ": Theta(M,N) = " + std::to_string(a) + ", Theta(N,M) = " + std::to_string(b) +
                           " for M = " + describe(fam, m) + ", N = " + describe(fam, n));
    });
  }
  return r.tally;
}

Tally theta_additivity(std::uint32_t seed, std::size_t cases) {
  Runner r("theta additivity", seed);
  const auto& fams = families();
  for (std::size_t c = 0; r.tally.cases < cases && c < 2 * cases; ++c) {
    const Family& fam = fams[c % fams.size()];
    r.run_case([&] {
      const ModulePresentation m1 = random_module(r.rng, fam);
      const ModulePresentation m2 = random_module(r.rng, fam);
      const ModulePresentation n = random_module(r.rng, fam);
      const ModulePresentation sum(PolyMatrix::block_diagonal(m1.relations(), m2.relations()), fam.f);
      const long lhs = th(sum, n), rhs = th(m1, n) + th(m2, n);
      r.expect(lhs == rhs, fam.name + ": Theta(M1+M2, N) = " + std::to_string(lhs) + ", sum of parts " +
                               std::to_string(rhs) + " for M1 = " + describe(fam, m1) + ", M2 = " + describe(fam, m2) +
                               ", N = " + describe(fam, n));
      const long lhs2 = th(n, sum), rhs2 = th(n, m1) + th(n, m2);
      r.expect(lhs2 == rhs2, fam.name + ": Theta(N, M1+M2) = " + std::to_string(lhs2) + ", sum of parts " +
                                 std::to_string(rhs2));
    });
  }
  return r.tally;
}

Tally theta_vanishing(std::uint32_t seed, std::size_t cases) {
  Runner r("Artinian/free vanishing", seed);
  const auto& fams = families();
  for (std::size_t c = 0; r.tally.cases < cases && c < 2 * cases; ++c) {
    const Family& fam = fams[c % fams.size()];
    r.run_case([&] {
      const ModulePresentation n = random_module(r.rng, fam);
      const ModulePresentation art = random_artinian_module(r.rng, fam);
      const std::size_t rank = 1 + pick(r.rng, 2);
      const ModulePresentation free(PolyMatrix::scalar(rank, fam.f), fam.f);
      r.expect(th(art, n) == 0, fam.name + ": Theta(Artinian, N) != 0 for N = " + describe(fam, n));
      r.expect(th(n, art) == 0, fam.name + ": Theta(N, Artinian) != 0 for N = " + describe(fam, n));
      r.expect(th(free, n) == 0, fam.name + ": Theta(free, N) != 0 for N = " + describe(fam, n));
      r.expect(th(n, free) == 0, fam.name + ": Theta(N, free) != 0 for N = " + describe(fam, n));
    });
  }
  return r.tally;
}

Tally theta_shift_antisymmetry(std::uint32_t seed, std::size_t cases) {
  Runner r("shift antisymmetry", seed);
  const auto& fams = families();
  for (std::size_t c = 0; r.tally.cases < cases && c < 2 * cases; ++c) {
    const Family& fam = fams[c % fams.size()];
    r.run_case([&] {
      const MatrixFactorization m = random_mf(r.rng, fam);
      const ModulePresentation n = random_module(r.rng, fam);
      const long a = th(ModulePresentation::from_mf(m), n);
      const long b = th(ModulePresentation::from_mf(mf_shift(m)), n);
      r.expect(a == -b, fam.name + ": Theta(M,N) = " + std::to_string(a) + " but Theta(shift M, N) = " +
                            std::to_string(b) + " for N = " + describe(fam, n));
    });
  }
  return r.tally;
}

Tally residue_well_definedness(std::uint32_t seed, std::size_t cases) {
  Runner r("residue well-definedness", seed);
  std::vector<std::pair<std::vector<std::string>, std::string>> fs;
  for (const Family& fam : families()) fs.emplace_back(fam.vars, to_string(fam.f, fam.vars));
  fs.push_back({{"x", "y"}, "x^3 + y^4"});
  fs.push_back({{"x", "y"}, "x^2*y + y^4 + x^3"});
  fs.push_back({{"x", "y", "z"}, "x^2 + y^3 + z^3"});
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const auto& [vars, text] = fs[k];
    const std::size_t n = vars.size();
    const MilnorAlgebra alg(parse_poly(text, vars));
    const ResidueData data = residue_functional(alg);
    const std::size_t share = cases / fs.size() + (k < cases % fs.size() ? 1 : 0);
    for (std::size_t c = 0; c < share; ++c) {
      r.run_case([&] {
        const Poly g = testing::random_poly(r.rng, n, 5, 4);
        const Rational direct = residue_by_expansion(data, g);
        r.expect(direct == residue(alg, data, g), text + ": expansion and normal form disagree");
        // Adding an element of the Jacobian ideal does not change the residue.
        Poly shifted = g;
        for (const Poly& d : alg.jacobian()) shifted += testing::random_poly(r.rng, n, 3, 2) * d;
        r.expect(residue_by_expansion(data, shifted) == direct, text + ": residue changes modulo the Jacobian ideal");
      });
    }
  }
  return r.tally;
}

}  // namespace thetalab::props
