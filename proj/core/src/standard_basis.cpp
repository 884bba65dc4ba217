#include "thetalab/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "thetalab/error.hpp"

namespace thetalab {
namespace {

// A module element together with its expression in terms of some fixed
// generator list (rep has rank 0 when the caller does not need it).
struct Element {
  VecPoly value;
  VecPoly rep;
  ModuleTerm lead;
  int ecart = 0;
};

int ecart_of(const VecPoly& v, const ModuleTerm& lead) { return v.degree() - lead.monomial.degree(); }

Element make_element(VecPoly value, VecPoly rep, const ModuleOrder& ord) {
  Element e;
  e.lead = ord.leading_term(value);
  e.ecart = ecart_of(value, e.lead);
  e.value = std::move(value);
  e.rep = std::move(rep);
  return e;
}

void normalize(Element& e) {
  if (e.lead.coefficient == 1) return;
  const Rational inv = 1 / e.lead.coefficient;
  e.value = inv * e.value;
  if (e.rep.rank() != 0) e.rep = inv * e.rep;
  e.lead.coefficient = 1;
}

bool reducible_by(const ModuleTerm& lead, const Element& t) {
  return t.lead.component == lead.component && t.lead.monomial.divides(lead.monomial);
}

// h -= (lc(h)/lc(t)) * (lm(h)/lm(t)) * t, cancelling the leading term of h.
void cancel_lead(VecPoly& value, VecPoly& rep, const ModuleTerm& lead, const Element& t) {
  const Monomial shift = lead.monomial / t.lead.monomial;
  const Rational factor = lead.coefficient / t.lead.coefficient;
  value -= t.value.mul_term(shift, factor);
  if (rep.rank() != 0) rep -= t.rep.mul_term(shift, factor);
}

// Mora's weak normal form with ecart-driven reducer selection; among reducers
// of equal ecart the lowest index wins.
// Reduction stops early once the leading term reaches component `stop`.
std::pair<VecPoly, VecPoly> mora_normal_form(VecPoly value, VecPoly rep, std::span<const Element> basis,
                                             const ModuleOrder& ord,
                                             std::size_t stop = std::numeric_limits<std::size_t>::max()) {
  std::deque<Element> extra;
  for (;;) {
    if (value.is_zero()) return {std::move(value), std::move(rep)};
    const ModuleTerm lead = ord.leading_term(value);
    if (lead.component >= stop) return {std::move(value), std::move(rep)};
    const Element* best = nullptr;
    for (const Element& t : basis) {
      if (reducible_by(lead, t) && (best == nullptr || t.ecart < best->ecart)) best = &t;
    }
    for (const Element& t : extra) {
      if (reducible_by(lead, t) && (best == nullptr || t.ecart < best->ecart)) best = &t;
    }
    if (best == nullptr) return {std::move(value), std::move(rep)};
    const int h_ecart = ecart_of(value, lead);
    // Under a global well-order plain division already terminates, and the
    // unit multipliers a T-set introduces would not be units in P.
    if (!ord.global && best->ecart > h_ecart) {
      // best may point into extra; deque::push_back keeps references valid.
      extra.push_back(Element{value, rep, lead, h_ecart});
    }
    cancel_lead(value, rep, lead, *best);
  }
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  // Degree of the homogenized S-vector; pairs are treated in this order,
  // which is Lazard's degree-by-degree order and keeps tails short.
  int sugar;
};

// With head_rank set, elements whose leading term lies in a component
// >= head_rank are collected but never paired or reduced further: this is
// all a syzygy computation needs, since by Schreyer's theorem the relations
// produced from head pairs already generate.
std::vector<Element> compute_standard_basis(std::vector<Element> gens, const ModuleOrder& ord,
                                            std::size_t head_rank = std::numeric_limits<std::size_t>::max()) {
  std::vector<Element> basis;
  std::vector<Pair> pairs;
  auto add = [&](Element e) {
    normalize(e);
    const std::size_t k = basis.size();
    if (e.lead.component >= head_rank) {
      basis.push_back(std::move(e));
      return;
    }
    const Monomial& lk = e.lead.monomial;
    // Chain criterion (Gebauer-Moeller): an old pair (i, j) is redundant when
    // the new lead divides lcm(i, j) strictly from both sides.
    std::erase_if(pairs, [&](const Pair& p) {
      if (basis[p.i].lead.component != e.lead.component || !lk.divides(p.lcm)) return false;
      return Monomial::lcm(basis[p.i].lead.monomial, lk) != p.lcm &&
             Monomial::lcm(basis[p.j].lead.monomial, lk) != p.lcm;
    });
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead.component != e.lead.component) continue;
      Monomial l = Monomial::lcm(basis[i].lead.monomial, lk);
      const int sugar = std::max(basis[i].value.degree() + (l.degree() - basis[i].lead.monomial.degree()),
                                 e.value.degree() + (l.degree() - lk.degree()));
      fresh.push_back(Pair{i, k, std::move(l), sugar});
    }
    // Among new pairs with the same lcm only one is needed; a pair whose lcm
    // is a proper multiple of another new pair's lcm is covered by the chain.
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
        if (a == b || drop[b] || !fresh[b].lcm.divides(fresh[a].lcm)) continue;
        drop[a] = fresh[b].lcm != fresh[a].lcm || b < a;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!drop[a]) pairs.push_back(std::move(fresh[a]));
    }
    basis.push_back(std::move(e));
  };
  for (Element& g : gens) {
    if (!g.value.is_zero()) add(std::move(g));
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    const Pair p = *it;
    pairs.erase(it);
    const Element& a = basis[p.i];
    const Element& b = basis[p.j];
    const Monomial sa = p.lcm / a.lead.monomial;
    const Monomial sb = p.lcm / b.lead.monomial;
    VecPoly value = a.value.mul_term(sa, 1 / a.lead.coefficient) - b.value.mul_term(sb, 1 / b.lead.coefficient);
    VecPoly rep;
    if (a.rep.rank() != 0) rep = a.rep.mul_term(sa, 1 / a.lead.coefficient) - b.rep.mul_term(sb, 1 / b.lead.coefficient);
    auto [h, hrep] = mora_normal_form(std::move(value), std::move(rep), basis, ord, head_rank);
    if (!h.is_zero()) add(make_element(std::move(h), std::move(hrep), ord));
  }
  // Drop elements whose leading term is divisible by an earlier-kept one.
  // Relations past head_rank are generators, not a standard basis: keep all.
  std::vector<bool> redundant(basis.size(), false);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].lead.component >= head_rank) continue;
    for (std::size_t i = 0; i < basis.size() && !redundant[k]; ++i) {
      if (i == k || !reducible_by(basis[k].lead, basis[i])) continue;
      // equal leads: keep the older one
      redundant[k] = basis[i].lead.monomial != basis[k].lead.monomial || i < k;
    }
  }
  std::vector<Element> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!redundant[k]) minimal.push_back(std::move(basis[k]));
  }
  return minimal;
}

std::vector<Element> to_elements(std::span<const VecPoly> gens, const ModuleOrder& ord, bool track,
                                 std::size_t rep_rank) {
  std::vector<Element> out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    VecPoly rep = track ? VecPoly::unit(rep_rank, gens[j].nvars(), j) : VecPoly();
    out.push_back(make_element(gens[j], std::move(rep), ord));
  }
  return out;
}

void check_ranks(std::span<const VecPoly> gens, std::size_t rank) {
  for (const VecPoly& g : gens) {
    if (g.rank() != rank) {
      throw Error(ErrorCode::RankMismatch,
                  "generator of rank " + std::to_string(g.rank()) + " in a module of rank " + std::to_string(rank));
    }
  }
}

std::size_t infer_nvars(std::span<const VecPoly> gens) {
  for (const VecPoly& g : gens) {
    if (g.nvars() != 0) return g.nvars();
  }
  return 0;
}

}  // namespace

StdBasis::StdBasis(std::vector<VecPoly> generators, std::size_t rank, std::size_t nvars, LocalOrder order)
    : gens_(std::move(generators)), order_{std::move(order)}, rank_(rank), nvars_(nvars) {
  check_ranks(gens_, rank_);
  for (const VecPoly& g : gens_) {
    leads_.push_back(order_.leading_term(g));
    ecarts_.push_back(ecart_of(g, leads_.back()));
  }
  compute_length();
}

void StdBasis::compute_length() {
  length_ = LengthResult{};
  std::size_t count = 0;
  std::vector<ModuleMonomial> monos;
  for (std::size_t comp = 0; comp < rank_; ++comp) {
    std::vector<const Monomial*> ideal;
    bool unit = false;
    for (const ModuleTerm& t : leads_) {
      if (t.component != comp) continue;
      if (t.monomial.is_one()) unit = true;
      ideal.push_back(&t.monomial);
    }
    if (unit) continue;
    std::vector<int> bound(nvars_, std::numeric_limits<int>::max());
    for (const Monomial* m : ideal) {
      std::size_t support = 0;
      std::size_t var = 0;
      for (std::size_t v = 0; v < nvars_; ++v) {
        if ((*m)[v] != 0) {
          ++support;
          var = v;
        }
      }
      if (support == 1) bound[var] = std::min(bound[var], (*m)[var]);
    }
    for (int b : bound) {
      if (b == std::numeric_limits<int>::max()) return;  // infinite
    }
    // Enumerate the box below the pure powers, odometer style.
    Monomial cur(nvars_);
    for (;;) {
      const bool in_ideal = std::any_of(ideal.begin(), ideal.end(), [&](const Monomial* m) { return m->divides(cur); });
      if (!in_ideal) {
        monos.push_back(ModuleMonomial{comp, cur});
        ++count;
      }
      std::size_t v = 0;
      while (v < nvars_) {
        if (cur[v] + 1 < bound[v]) {
          cur.set(v, cur[v] + 1);
          break;
        }
        cur.set(v, 0);
        ++v;
      }
      if (v == nvars_) break;
    }
  }
  std::sort(monos.begin(), monos.end(), [&](const ModuleMonomial& a, const ModuleMonomial& b) {
    return order_.compare(a.component, a.monomial, b.component, b.monomial) == std::strong_ordering::greater;
  });
  length_.value = count;
  length_.standard_monomials = std::move(monos);
  truncation_degree_ = 0;
  for (const ModuleMonomial& m : length_.standard_monomials) {
    truncation_degree_ = std::max(truncation_degree_, m.monomial.degree() + 1);
  }
}

VecPoly StdBasis::normal_form(const VecPoly& v) const {
  if (v.rank() != rank_) throw Error(ErrorCode::RankMismatch, "normal form of a vector of wrong rank");
  std::vector<Element> basis;
  for (std::size_t i = 0; i < gens_.size(); ++i) basis.push_back(Element{gens_[i], VecPoly(), leads_[i], ecarts_[i]});
  return mora_normal_form(v, VecPoly(), basis, order_).first;
}

VecPoly StdBasis::reduce(const VecPoly& v) const {
  if (v.rank() != rank_) throw Error(ErrorCode::RankMismatch, "reduction of a vector of wrong rank");
  if (!length_.finite()) throw Error(ErrorCode::InfiniteLength, "quotient is not of finite length");
  // Every monomial of degree >= truncation_degree_ lies in the leading
  // module, hence m^K P^r is contained in U_loc and such terms can be dropped.
  const int top = truncation_degree_ - 1;
  auto truncate = [top](VecPoly x) {
    for (std::size_t i = 0; i < x.rank(); ++i) x[i] = x[i].truncated(top);
    return x;
  };
  VecPoly h = truncate(v);
  VecPoly result(rank_, nvars_ != 0 ? nvars_ : v.nvars());
  while (!h.is_zero()) {
    const ModuleTerm lead = order_.leading_term(h);
    std::size_t found = gens_.size();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (leads_[i].component == lead.component && leads_[i].monomial.divides(lead.monomial)) {
        found = i;
        break;
      }
    }
    if (found == gens_.size()) {
      result[lead.component].add_term(lead.monomial, lead.coefficient);
      h[lead.component].add_term(lead.monomial, -lead.coefficient);
      continue;
    }
    const Monomial shift = lead.monomial / leads_[found].monomial;
    h -= gens_[found].mul_term(shift, lead.coefficient / leads_[found].coefficient);
    h = truncate(std::move(h));
  }
  return result;
}

std::vector<Rational> StdBasis::coordinates(const VecPoly& v) const {
  const VecPoly r = reduce(v);
  std::vector<Rational> coords;
  coords.reserve(length_.standard_monomials.size());
  for (const ModuleMonomial& m : length_.standard_monomials) coords.push_back(r[m.component].coefficient(m.monomial));
  return coords;
}

VecPoly normal_form(const VecPoly& v, std::span<const VecPoly> basis, const LocalOrder& order) {
  check_ranks(basis, v.rank());
  const ModuleOrder ord{order};
  const std::vector<Element> elems = to_elements(basis, ord, false, 0);
  return mora_normal_form(v, VecPoly(), elems, ord).first;
}

StdBasis std_basis(std::span<const VecPoly> gens, const LocalOrder& order) {
  if (gens.empty()) throw Error(ErrorCode::RankMismatch, "standard basis of an empty generator list");
  const std::size_t rank = gens.front().rank();
  check_ranks(gens, rank);
  const ModuleOrder ord{order};
  std::vector<Element> sb = compute_standard_basis(to_elements(gens, ord, false, 0), ord);
  std::vector<VecPoly> values;
  values.reserve(sb.size());
  for (Element& e : sb) values.push_back(std::move(e.value));
  return StdBasis(std::move(values), rank, infer_nvars(gens), order);
}

std::vector<VecPoly> as_vectors(std::span<const Poly> polys) {
  std::vector<VecPoly> out;
  out.reserve(polys.size());
  for (const Poly& p : polys) out.push_back(VecPoly::scalar(p));
  return out;
}

StdBasis std_basis(std::span<const Poly> gens, const LocalOrder& order) {
  const std::vector<VecPoly> vecs = as_vectors(gens);
  return std_basis(std::span<const VecPoly>(vecs), order);
}

LengthResult length_of_quotient(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars) {
  check_ranks(gens, rank);
  if (rank == 0) return LengthResult{std::size_t{0}, {}};
  std::vector<VecPoly> nonzero;
  for (const VecPoly& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) {
    if (nvars == 0) return LengthResult{rank, {}};
    return LengthResult{};
  }
  return std_basis(std::span<const VecPoly>(nonzero)).length();
}

LengthResult length_of_quotient(std::span<const Poly> gens, std::size_t nvars) {
  const std::vector<VecPoly> vecs = as_vectors(gens);
  return length_of_quotient(std::span<const VecPoly>(vecs), 1, nvars);
}

std::vector<VecPoly> syzygies(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars) {
  check_ranks(gens, rank);
  const std::size_t k = gens.size();
  if (k == 0) return {};
  if (nvars == 0) nvars = infer_nvars(gens);
  // Position-over-term on (g_j, e_j): elements whose leading term sits past
  // the first `rank` components have zero head and carry a relation.
  // Localization is flat, so polynomial syzygies generate the local ones and
  // a global order suffices; Mora reduction with syzygy tails attached can
  // climb in degree for a very long time.
  std::vector<Element> aug;
  const ModuleOrder ord{LocalOrder{}, true};
  for (std::size_t j = 0; j < k; ++j) {
    aug.push_back(make_element(gens[j].concat(VecPoly::unit(k, nvars, j)), VecPoly(), ord));
  }
  std::vector<Element> sb = compute_standard_basis(std::move(aug), ord, rank);
  std::vector<VecPoly> out;
  for (Element& e : sb) {
    if (e.lead.component < rank) continue;
    out.push_back(e.value.slice(rank, k));
  }
  return out;
}

LiftResult lift(const VecPoly& target, std::span<const VecPoly> gens) {
  const std::size_t rank = target.rank();
  check_ranks(gens, rank);
  const std::size_t k = gens.size();
  const std::size_t nvars = target.nvars() != 0 ? target.nvars() : infer_nvars(gens);
  if (target.is_zero()) return LiftResult{std::vector<Poly>(k, Poly(nvars)), Poly::constant(nvars, Rational(1))};
  if (k == 0) throw Error(ErrorCode::NotInModule, "nonzero target and no generators");
  const ModuleOrder ord{};
  // Representations live in P^{k+1}; slot k stands for the target itself.
  std::vector<Element> sb = compute_standard_basis(to_elements(gens, ord, true, k + 1), ord);
  auto [h, rep] = mora_normal_form(target, VecPoly::unit(k + 1, nvars, k), sb, ord);
  if (!h.is_zero()) throw Error(ErrorCode::NotInModule, "target is not in the submodule");
  // 0 = rep_k * target + sum_j rep_j * g_j, rep_k a unit.
  const Rational u0 = rep[k].constant_term();
  if (u0 == 0) throw Error(ErrorCode::NotInModule, "normal form produced a non-unit multiplier");
  LiftResult out;
  out.denominator = (1 / u0) * rep[k];
  for (std::size_t j = 0; j < k; ++j) out.numerators.push_back((-1 / u0) * rep[j]);
  return out;
}

}  // namespace thetalab
