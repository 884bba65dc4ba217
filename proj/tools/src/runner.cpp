#include <algorithm>
#include <functional>

#include "thetalab/chern.hpp"
#include "thetalab/error.hpp"
#include "thetalab/milnor.hpp"
#include "thetalab/parallel.hpp"
#include "thetalab/poly_parser.hpp"
#include "thetalab/spectrum.hpp"
#include "thetalab/theta.hpp"
#include "thetalab/truncation_oracle.hpp"
#include "thetalab/version.hpp"
#include "thetalab_cli/job.hpp"

namespace thetalab::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Verdict { Pass, NotApplicable, Fail, Error };

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

int exit_code_of(Verdict v) {
  switch (v) {
    case Verdict::Fail: return 1;
    case Verdict::Error: return 2;
    default: return 0;
  }
}

Verdict worst(Verdict a, Verdict b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

std::string str(const Rational& q) { return to_string(q); }
std::string str(std::size_t v) { return std::to_string(v); }
std::string str(long v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& q : v) out.push_back(str(q));
  return out;
}

struct PreparedModule {
  std::optional<ThetaModule> module;
  ErrorCode code = ErrorCode::Unsupported;
  std::string error;
};

struct TaskOutput {
  json inputs = json::object();
  json result = json::object();
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> notes;

  void note(const std::string& n) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  }
};

class Runner {
 public:
  Runner(const JobSpec& job, const RunOptions& options) : job_(job), options_(options) {
    inner_threads_ = std::max(1u, options.threads);
    prepare_modules();
  }

  TaskOutput run(const TaskSpec& task) const {
    TaskOutput out;
    if (task.kind == "milnor") milnor_task(out);
    else if (task.kind == "residue") residue_task(out);
    else if (task.kind == "spectrum") spectrum_task(out);
    else if (task.kind == "theta") theta_task(task, out);
    else if (task.kind == "gram") gram_task(task, out);
    else if (task.kind == "chern") chern_task(task, out);
    else if (task.kind == "intersection") intersection_task(task, out);
    else if (task.kind == "check-all") check_all_task(out);
    return out;
  }

 private:
  std::size_t nvars() const { return job_.vars.size(); }
  std::size_t dim_n() const { return nvars() - 1; }

  std::string poly(const Poly& p) const { return to_string(p, job_.vars); }
  std::string monomial(const Monomial& m) const { return poly(Poly::term(m, Rational(1))); }

  void prepare_modules() {
    std::vector<const ModuleSpec*> specs;
    for (const auto& [name, spec] : job_.modules) specs.push_back(&spec);
    std::vector<PreparedModule> prepared(specs.size());
    parallel_for(specs.size(), std::max(1u, options_.threads), [&](std::size_t i) {
      try {
        prepared[i].module = prepare_theta_module(specs[i]->presentation);
      } catch (const Error& e) {
        prepared[i].code = e.code();
        prepared[i].error = e.what();
      }
    });
    for (std::size_t i = 0; i < specs.size(); ++i) prepared_.emplace(specs[i]->name, std::move(prepared[i]));
  }

  const ThetaModule& module(const std::string& name) const {
    const PreparedModule& p = prepared_.at(name);
    if (!p.module) {
      throw Error(p.code, "module '" + name + "' (" + job_.modules.at(name).span.to_string() + "): " + p.error);
    }
    return *p.module;
  }

  bool is_cone() const {
    if (nvars() != 3) return false;
    const Poly x0 = Poly::variable(3, 0), x1 = Poly::variable(3, 1), x2 = Poly::variable(3, 2);
    return job_.f == x0 * x1 - x2 * x2;
  }

  void cone_note(TaskOutput& out) const {
    if (!is_cone()) return;
    out.note("CONE_MODULE: on this cone the ruling line is R/(" + job_.vars[0] + "," + job_.vars[2] +
             "); R/(" + job_.vars[0] + "," + job_.vars[1] + ") has finite length here, so its Theta vanishes");
  }

  // Theta recomputed from oracle Tor lengths; nullopt if the truncation is unstable.
  std::optional<long> oracle_theta(const ThetaModule& m, const ModulePresentation& n) const {
    if (m.has_finite_projective_dimension()) return 0;
    const auto tor = oracle::stable_tor_lengths(m.factorization->a(), m.factorization->b(), n.relations());
    if (!tor) return std::nullopt;
    return static_cast<long>(tor->even) - static_cast<long>(tor->odd);
  }

  json oracle_length_json(std::size_t computed, const std::optional<std::size_t>& oracle, TaskOutput& out,
                          const std::string& key) const {
    json o = json::object();
    o[key] = oracle ? json(str(*oracle)) : json(nullptr);
    o["stable"] = oracle.has_value();
    o["agrees"] = oracle && *oracle == computed;
    if (!o["agrees"].get<bool>()) out.verdict = worst(out.verdict, Verdict::Fail);
    return o;
  }

  void milnor_task(TaskOutput& out) const {
    const MilnorAlgebra alg(job_.f);
    out.result["mu"] = str(alg.mu());
    json basis = json::array();
    for (const Monomial& m : alg.basis()) basis.push_back(monomial(m));
    out.result["basis"] = std::move(basis);
    if (options_.oracle_check) {
      std::vector<VecPoly> jac;
      for (const Poly& g : alg.jacobian()) jac.push_back(VecPoly::scalar(g));
      out.result["oracle"] = oracle_length_json(alg.mu(), oracle::stable_length(jac, 1, nvars()), out, "mu");
    }
  }

  void residue_task(TaskOutput& out) const {
    const MilnorAlgebra alg(job_.f);
    const ResidueData r = residue_functional(alg);
    json exps = json::array();
    for (int a : r.a) exps.push_back(str(a));
    out.result["exponents"] = std::move(exps);
    json values = json::array();
    for (std::size_t i = 0; i < alg.basis().size(); ++i) {
      values.push_back(json{{"monomial", monomial(alg.basis()[i])}, {"res", str(r.values[i])}});
    }
    out.result["values"] = std::move(values);
    const QMatrix pm = residue_pairing_matrix(alg, r);
    const Rational det = pm.determinant();
    out.result["pairing"] = matrix_json(pm);
    out.result["determinant"] = str(det);
    out.result["nondegenerate"] = det != 0;
    if (det == 0) out.verdict = Verdict::Fail;
  }

  static bool spectrum_symmetric(const std::vector<SpectrumEntry>& spec, std::size_t n) {
    std::vector<Rational> levels, mirrored;
    for (const SpectrumEntry& e : spec) {
      levels.push_back(e.level);
      mirrored.push_back(Rational(static_cast<long>(n + 1)) - e.level);
    }
    std::sort(levels.begin(), levels.end());
    std::sort(mirrored.begin(), mirrored.end());
    return levels == mirrored;
  }

  json orthogonality_json(const MilnorAlgebra& alg, const OrthogonalityReport& rep) const {
    json viol = json::array();
    for (const auto& [i, j] : rep.violations) {
      viol.push_back(json::array({monomial(alg.basis()[i]), monomial(alg.basis()[j])}));
    }
    json degen = json::array();
    for (const Rational& l : rep.degenerate_levels) degen.push_back(str(l));
    return json{{"orthogonal", rep.orthogonal()},
                {"blocks_nondegenerate", rep.blocks_nondegenerate()},
                {"violations", std::move(viol)},
                {"degenerate_levels", std::move(degen)}};
  }

  void spectrum_task(TaskOutput& out) const {
    out.inputs["weights"] = job_.weights_text;
    const MilnorAlgebra alg(job_.f);
    const ResidueData r = residue_functional(alg);
    const std::vector<SpectrumEntry> spec = spectrum(alg, *job_.weights);
    json entries = json::array();
    for (const SpectrumEntry& e : spec) {
      entries.push_back(json{{"monomial", monomial(e.monomial)},
                             {"level", str(e.level)},
                             {"hodge_p", str(e.hodge_p)},
                             {"lambda_one", e.lambda_one},
                             {"ctilde_sign", str(e.ctilde_sign)}});
    }
    out.result["entries"] = std::move(entries);
    const bool symmetric = spectrum_symmetric(spec, dim_n());
    out.result["symmetric"] = symmetric;
    const OrthogonalityReport rep = graded_orthogonality_check(alg, r, *job_.weights);
    out.result["orthogonality"] = orthogonality_json(alg, rep);
    out.result["ctilde_pairing"] = matrix_json(ctilde_twisted_pairing(alg, r, *job_.weights));
    if (!symmetric || !rep.ok()) out.verdict = Verdict::Fail;
  }

  void theta_task(const TaskSpec& task, TaskOutput& out) const {
    json pairs_in = json::array();
    for (const auto& [m, n] : task.pairs) pairs_in.push_back(json::array({m, n}));
    out.inputs["pairs"] = std::move(pairs_in);
    if (!task.formulas.empty()) {
      json f = json::array();
      for (const auto& row : task.formulas) f.push_back(vector_json(row));
      out.inputs["formulas"] = std::move(f);
    }
    cone_note(out);

    std::vector<ThetaReport> reports(task.pairs.size());
    std::vector<std::optional<long>> oracle(task.pairs.size());
    parallel_for(task.pairs.size(), inner_threads_, [&](std::size_t k) {
      const ThetaModule& m = module(task.pairs[k].first);
      const ModulePresentation& n = job_.modules.at(task.pairs[k].second).presentation;
      reports[k] = theta(m, n);
      if (options_.oracle_check) oracle[k] = oracle_theta(m, n);
    });

    out.result["n"] = str(dim_n());
    const auto sign = theta_sign_factor(dim_n());
    out.result["sign_factor"] = sign ? json(str(*sign)) : json(nullptr);
    json values = json::array();
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const ThetaReport& r = reports[k];
      json v{{"M", task.pairs[k].first},
             {"N", task.pairs[k].second},
             {"l_even", str(r.l_even)},
             {"l_odd", str(r.l_odd)},
             {"theta", str(r.theta)}};
      if (!task.formulas.empty()) {
        const auto& f = task.formulas[k];
        const Rational expected = homogeneous_theta_formula(f[0], f[1], f[2], f[3]);
        v["formula"] = str(expected);
        v["formula_agrees"] = expected == Rational(r.theta);
        if (expected != Rational(r.theta)) out.verdict = Verdict::Fail;
      }
      if (options_.oracle_check) {
        v["oracle_theta"] = oracle[k] ? json(str(*oracle[k])) : json(nullptr);
        v["oracle_agrees"] = oracle[k] == r.theta;
        if (oracle[k] != r.theta) out.verdict = Verdict::Fail;
      }
      values.push_back(std::move(v));
      for (const std::string& n : r.notes) out.note(n);
    }
    out.result["pairs"] = std::move(values);
  }

  std::vector<ThetaModule> modules_of(const std::vector<std::string>& names) const {
    std::vector<ThetaModule> mods;
    for (const std::string& n : names) mods.push_back(module(n));
    return mods;
  }

  json psd_json(const GramVerdict& v) const {
    json j = json::object();
    j["status"] = to_string(v.status);
    j["psd"] = v.status == PsdStatus::NotApplicable ? json(nullptr) : json(v.status == PsdStatus::Psd);
    if (v.status == PsdStatus::NotApplicable) return j;
    j["rank"] = str(v.certificate.rank);
    json pivots = json::array();
    for (std::size_t k = 0; k < v.certificate.pivots.size(); ++k) {
      pivots.push_back(json{{"index", str(v.certificate.pivot_order[k])}, {"value", str(v.certificate.pivots[k])}});
    }
    j["ldlt_pivots"] = std::move(pivots);
    if (!v.certificate.psd) j["witness"] = vector_json(v.certificate.witness);
    return j;
  }

  void gram_task(const TaskSpec& task, TaskOutput& out) const {
    out.inputs["modules"] = task.modules;
    cone_note(out);
    const std::vector<ThetaModule> mods = modules_of(task.modules);
    const GramVerdict v = gram_from_prepared(mods, inner_threads_);
    out.result["G"] = matrix_json(v.g);
    const auto sign = theta_sign_factor(dim_n());
    out.result["sign_factor"] = sign ? json(str(*sign)) : json(nullptr);
    out.result["signed_G"] = matrix_json(v.signed_g);
    const json psd = psd_json(v);
    for (const auto& [k, val] : psd.items()) out.result[k] = val;
    for (const std::string& n : v.notes) out.note(n);
    if (v.status == PsdStatus::NotPsd) out.verdict = Verdict::Fail;
    if (v.status == PsdStatus::NotApplicable) out.verdict = Verdict::NotApplicable;

    if (options_.oracle_check) {
      const std::size_t k = mods.size();
      std::vector<std::optional<long>> entries(k * k);
      parallel_for(k * k, inner_threads_, [&](std::size_t idx) {
        entries[idx] = oracle_theta(mods[idx / k], mods[idx % k].presentation);
      });
      bool agrees = true;
      json g = json::array();
      for (std::size_t i = 0; i < k; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < k; ++j) {
          const auto& e = entries[i * k + j];
          row.push_back(e ? json(str(*e)) : json(nullptr));
          agrees = agrees && e && Rational(*e) == v.g(i, j);
        }
        g.push_back(std::move(row));
      }
      out.result["oracle"] = json{{"G", std::move(g)}, {"agrees", agrees}};
      if (!agrees) out.verdict = Verdict::Fail;
    }
  }

  json forms_json(const std::vector<DiffForm>& forms) const {
    json a = json::array();
    for (const DiffForm& w : forms) a.push_back(to_string(w, job_.vars));
    return a;
  }

  void chern_task(const TaskSpec& task, TaskOutput& out) const {
    out.inputs["modules"] = task.modules;
    const std::vector<ThetaModule> mods = modules_of(task.modules);
    const bool even_vars = nvars() % 2 == 0;
    std::optional<MilnorAlgebra> alg;
    if (even_vars) alg.emplace(job_.f);

    json per = json::array();
    for (std::size_t k = 0; k < mods.size(); ++k) {
      json m{{"module", task.modules[k]}, {"finite_projective_dimension", mods[k].has_finite_projective_dimension()}};
      if (mods[k].has_finite_projective_dimension()) {
        m["omega"] = json::array();
        m["eta"] = json::array();
        m["d_eta_equals_omega"] = true;
        if (alg) m["top_class"] = "0";
      } else {
        const ChernClasses ch = chern_forms(*mods[k].factorization);
        bool ok = true;
        for (std::size_t i = 0; i < ch.omega.size(); ++i) ok = ok && d(ch.eta[i]) == ch.omega[i];
        m["omega"] = forms_json(ch.omega);
        m["eta"] = forms_json(ch.eta);
        m["d_eta_equals_omega"] = ok;
        if (!ok) out.verdict = Verdict::Fail;
        if (alg) m["top_class"] = poly(chern_top_class(*mods[k].factorization, *alg));
      }
      per.push_back(std::move(m));
    }
    out.result["modules"] = std::move(per);

    if (!alg) {
      out.note("PARITY: top Chern classes and the residue comparison need an even number of variables");
      return;
    }
    const ThetaResidueComparison cmp = theta_vs_residue(mods, *alg, residue_functional(*alg), inner_threads_);
    out.result["theta_vs_residue"] = json{{"theta", matrix_json(cmp.theta)},
                                          {"residue", matrix_json(cmp.residue)},
                                          {"sign", str(cmp.sign)},
                                          {"scalar", cmp.scalar ? json(str(*cmp.scalar)) : json(nullptr)},
                                          {"consistent", cmp.consistent},
                                          {"degenerate", cmp.degenerate}};
    if (!cmp.consistent) out.verdict = Verdict::Fail;
  }

  static json operand_json(const IdealOperand& op) {
    return json{{"module", op.module.empty() ? json(nullptr) : json(op.module)}, {"gens", op.gens_text}};
  }

  void intersection_task(const TaskSpec& task, TaskOutput& out) const {
    out.inputs["I"] = operand_json(task.i);
    out.inputs["J"] = operand_json(task.j);
    out.inputs["theta"] = task.compare_theta;
    out.note("ASSUMES_TOR_INDEPENDENCE: the length of P/(I+J) equals the intersection multiplicity only when higher "
             "Tor over P vanishes");
    const std::size_t len = intersection_multiplicity(task.i.gens, task.j.gens);
    out.result["length"] = str(len);
    if (task.compare_theta) {
      const auto m = ModulePresentation::from_ideal(task.i.gens, job_.f);
      const auto n = ModulePresentation::from_ideal(task.j.gens, job_.f);
      const ThetaReport r = theta(m, n);
      out.result["theta"] = str(r.theta);
      out.result["theta_equals_length"] = Rational(r.theta) == Rational(static_cast<long>(len));
      if (Rational(r.theta) != Rational(static_cast<long>(len))) out.verdict = Verdict::Fail;
    }
    if (options_.oracle_check) {
      std::vector<VecPoly> gens;
      for (const Poly& g : task.i.gens) gens.push_back(VecPoly::scalar(g));
      for (const Poly& g : task.j.gens) gens.push_back(VecPoly::scalar(g));
      out.result["oracle"] = oracle_length_json(len, oracle::stable_length(gens, 1, nvars()), out, "length");
    }
  }

  // One sub-check of check-all: cases counted, violations described.
  struct Check {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> violations;
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
      ++cases;
      if (!ok) {
        violations.push_back(what);
        verdict = worst(verdict, Verdict::Fail);
      }
    }
  };

  void check_all_task(TaskOutput& out) const {
    std::vector<std::string> names;
    for (const auto& [name, spec] : job_.modules) names.push_back(name);
    out.inputs["modules"] = names;
    cone_note(out);

    std::vector<Check> checks;
    auto guarded = [&](const std::string& name, const std::function<void(Check&)>& body) {
      Check c;
      c.name = name;
      try {
        body(c);
      } catch (const Error& e) {
        c.verdict = Verdict::Error;
        c.violations.push_back(e.what());
      }
      checks.push_back(std::move(c));
    };

    std::vector<ThetaModule> mods;
    QMatrix t;
    std::vector<std::optional<long>> oracle_t;
    guarded("modules", [&](Check& c) {
      mods = modules_of(names);
      const std::size_t k = mods.size();
      t = QMatrix(k, k);
      oracle_t.assign(k * k, std::nullopt);
      std::vector<long> vals(k * k);
      parallel_for(k * k, inner_threads_, [&](std::size_t idx) {
        vals[idx] = theta(mods[idx / k], mods[idx % k].presentation).theta;
        if (options_.oracle_check) oracle_t[idx] = oracle_theta(mods[idx / k], mods[idx % k].presentation);
      });
      for (std::size_t idx = 0; idx < k * k; ++idx) t(idx / k, idx % k) = Rational(vals[idx]);
      c.cases = k;
    });
    const bool have_modules = checks.back().verdict == Verdict::Pass;
    const std::size_t k = mods.size();
    auto pair_label = [&](const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; };
    auto th = [&](const ThetaModule& m, const ModulePresentation& n) { return Rational(theta(m, n).theta); };

    if (have_modules) {
      guarded("symmetry", [&](Check& c) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) {
            c.expect(t(i, j) == t(j, i), "Theta" + pair_label(names[i], names[j]) + " = " + str(t(i, j)) +
                                             " but Theta" + pair_label(names[j], names[i]) + " = " + str(t(j, i)));
          }
        }
      });

      guarded("additivity", [&](Check& c) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i; j < k; ++j) {
            const PolyMatrix rel = PolyMatrix::block_diagonal(mods[i].presentation.relations(),
                                                              mods[j].presentation.relations());
            const ModulePresentation sum(rel, job_.f);
            const ThetaModule s = prepare_theta_module(sum);
            const std::string label = names[i] + "+" + names[j];
            for (std::size_t l = 0; l < k; ++l) {
              const Rational left = th(s, mods[l].presentation);
              c.expect(left == t(i, l) + t(j, l), "Theta" + pair_label(label, names[l]) + " = " + str(left));
              const Rational right = th(mods[l], sum);
              c.expect(right == t(l, i) + t(l, j), "Theta" + pair_label(names[l], label) + " = " + str(right));
            }
          }
        }
      });

      guarded("vanishing", [&](Check& c) {
        std::vector<Poly> maximal;
        for (std::size_t v = 0; v < nvars(); ++v) maximal.push_back(Poly::variable(nvars(), v));
        const ModulePresentation field = ModulePresentation::from_ideal(maximal, job_.f);
        const ModulePresentation free(PolyMatrix::scalar(1, job_.f), job_.f);
        const ThetaModule field_m = prepare_theta_module(field);
        const ThetaModule free_m = prepare_theta_module(free);
        c.expect(th(field_m, field) == 0, "Theta(k, k) != 0");
        for (std::size_t l = 0; l < k; ++l) {
          c.expect(th(field_m, mods[l].presentation) == 0, "Theta" + pair_label("k", names[l]) + " != 0");
          c.expect(th(mods[l], field) == 0, "Theta" + pair_label(names[l], "k") + " != 0");
          c.expect(th(free_m, mods[l].presentation) == 0, "Theta" + pair_label("R", names[l]) + " != 0");
          c.expect(th(mods[l], free) == 0, "Theta" + pair_label(names[l], "R") + " != 0");
        }
      });

      guarded("shift", [&](Check& c) {
        for (std::size_t i = 0; i < k; ++i) {
          if (mods[i].has_finite_projective_dimension()) continue;
          const ThetaModule shifted =
              prepare_theta_module(ModulePresentation::from_mf(mf_shift(*mods[i].factorization)));
          for (std::size_t l = 0; l < k; ++l) {
            const Rational v = th(shifted, mods[l].presentation);
            c.expect(v == -t(i, l), "Theta" + pair_label("shift " + names[i], names[l]) + " = " + str(v) +
                                        ", expected " + str(-t(i, l)));
          }
        }
      });

      guarded("psd", [&](Check& c) {
        const auto sign = theta_sign_factor(dim_n());
        if (!sign) {
          c.verdict = Verdict::NotApplicable;
          c.notes.push_back("PARITY: n = " + str(dim_n()) + " is even; semidefiniteness is only asserted for odd n");
          return;
        }
        const PsdCertificate cert = certify_psd(t * Rational(*sign));
        c.expect(cert.psd, "signed Gram matrix is not PSD, witness " + vector_json(cert.witness).dump());
      });

      if (options_.oracle_check) {
        guarded("oracle", [&](Check& c) {
          for (std::size_t idx = 0; idx < k * k; ++idx) {
            const auto& o = oracle_t[idx];
            c.expect(o && Rational(*o) == t(idx / k, idx % k),
                     "Theta" + pair_label(names[idx / k], names[idx % k]) + " = " + str(t(idx / k, idx % k)) +
                         " but oracle gives " + (o ? str(*o) : std::string("an unstable value")));
          }
        });
      }
    }

    guarded("orthogonality", [&](Check& c) {
      if (!job_.weights) {
        c.verdict = Verdict::NotApplicable;
        c.notes.push_back("no weights given; graded orthogonality needs a quasi-homogeneous grading");
        return;
      }
      const MilnorAlgebra alg(job_.f);
      const ResidueData r = residue_functional(alg);
      c.expect(spectrum_symmetric(spectrum(alg, *job_.weights), dim_n()), "spectrum is not symmetric");
      const OrthogonalityReport rep = graded_orthogonality_check(alg, r, *job_.weights);
      for (const auto& [i, j] : rep.violations) {
        c.expect(false, "res(" + monomial(alg.basis()[i]) + ", " + monomial(alg.basis()[j]) + ") != 0 across levels");
      }
      for (const Rational& l : rep.degenerate_levels) c.expect(false, "degenerate block at level " + str(l));
      if (rep.ok()) ++c.cases;
    });

    guarded("nondegeneracy", [&](Check& c) {
      const MilnorAlgebra alg(job_.f);
      const Rational det = residue_pairing_matrix(alg, residue_functional(alg)).determinant();
      c.expect(det != 0, "residue pairing is degenerate");
    });

    json arr = json::array();
    for (const Check& c : checks) {
      out.verdict = worst(out.verdict, c.verdict);
      arr.push_back(json{{"check", c.name},
                         {"cases", str(c.cases)},
                         {"verdict", verdict_name(c.verdict)},
                         {"violations", c.violations},
                         {"notes", c.notes}});
    }
    out.result["checks"] = std::move(arr);
    if (out.verdict == Verdict::NotApplicable) out.verdict = Verdict::Pass;
  }

  const JobSpec& job_;
  const RunOptions& options_;
  unsigned inner_threads_ = 1;
  std::map<std::string, PreparedModule> prepared_;
};

}  // namespace

RunResult run_job(const JobSpec& job, const RunOptions& options) {
  const Runner runner(job, options);
  std::vector<json> tasks(job.tasks.size());
  std::vector<Verdict> verdicts(job.tasks.size());
  std::vector<std::string> diagnostics(job.tasks.size());

  parallel_for(job.tasks.size(), std::max(1u, options.threads), [&](std::size_t k) {
    const TaskSpec& spec = job.tasks[k];
    TaskOutput out;
    try {
      out = runner.run(spec);
    } catch (const Error& e) {
      out.result = json{{"error", json{{"code", std::string(to_string(e.code()))},
                                       {"message", e.what()},
                                       {"at", spec.span.to_string()}}}};
      out.verdict = Verdict::Error;
      diagnostics[k] = "task '" + spec.name + "' (" + spec.span.to_string() + "): " + e.what();
    }
    verdicts[k] = out.verdict;
    tasks[k] = json{{"name", spec.name},
                    {"kind", spec.kind},
                    {"inputs", std::move(out.inputs)},
                    {"result", std::move(out.result)},
                    {"verdict", verdict_name(out.verdict)},
                    {"notes", out.notes}};
  });

  RunResult res;
  res.report["tool_version"] = kVersion;
  res.report["ring"] = json{{"vars", job.vars}};
  res.report["f"] = to_string(job.f, job.vars);
  res.report["tasks"] = json::array();
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    res.report["tasks"].push_back(std::move(tasks[k]));
    res.exit_code = std::max(res.exit_code, exit_code_of(verdicts[k]));
    if (!diagnostics[k].empty()) res.diagnostics.push_back(std::move(diagnostics[k]));
  }
  return res;
}

}  // namespace thetalab::cli
