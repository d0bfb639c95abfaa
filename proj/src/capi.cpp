#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <string>

#include "budget.hpp"
#include "dvr.hpp"
#include "horncone/horncone.h"
#include "json_io.hpp"
#include "lr.hpp"
#include "necessity.hpp"

using namespace horncone;
using nlohmann::json;

struct hc_options {
  WitnessOptions witness;
  bool coefficient_one_only = true;
  bool float_mode = false;
  int trials = 1000;
};

struct hc_result {
  hc_status status = HC_ERROR;
  std::string json_text;
  std::string message;
};

namespace {

const hc_options kDefaultOptions;

const hc_options& options_or_default(const hc_options* options) {
  return options ? *options : kDefaultOptions;
}

Partition parse_partition(const char* text, const char* what) {
  if (!text) throw std::invalid_argument(std::string(what) + " missing");
  Spectrum s = Spectrum::from_string(text);
  if (!s.is_partition())
    throw std::invalid_argument(std::string(what) + " is not a partition: " + text);
  return s.to_partition();
}

std::pair<std::vector<Spectrum>, Spectrum> parse_instance(const char* alphas, const char* gamma) {
  if (!alphas) throw std::invalid_argument("alphas missing");
  if (!gamma) throw std::invalid_argument("gamma missing");
  auto as = parse_spectra(alphas);
  Spectrum g = Spectrum::from_string(gamma);
  if (g.size() != as.at(0).size())
    throw std::invalid_argument("gamma length differs from the alpha spectra");
  return {std::move(as), std::move(g)};
}

/* Runs the body, turning exceptions into statuses; the body fills the JSON
   document and returns the verdict status. */
hc_status run_guarded(hc_result** result, const std::function<hc_status(hc_result&)>& body) {
  if (!result) return HC_USAGE;
  auto* res = new (std::nothrow) hc_result;
  if (!res) return HC_ERROR;
  try {
    res->status = body(*res);
  } catch (const BudgetExceeded& e) {
    res->status = HC_BUDGET;
    res->message = e.what();
  } catch (const std::invalid_argument& e) {
    res->status = HC_USAGE;
    res->message = e.what();
  } catch (const std::exception& e) {
    res->status = HC_ERROR;
    res->message = e.what();
  }
  if (res->json_text.empty()) res->json_text = "{}";
  *result = res;
  return res->status;
}

hc_status finish(hc_result& res, const json& doc, hc_status status) {
  res.json_text = doc.dump();
  return status;
}

hc_status check_common(const char* alphas, const char* gamma, const hc_options* options,
                       hc_result** result, int flavour) {
  return run_guarded(result, [&](hc_result& res) {
    auto [as, g] = parse_instance(alphas, gamma);
    const hc_options& opts = options_or_default(options);
    if (flavour == 0 && opts.float_mode) {
      std::vector<std::vector<double>> ad;
      for (const Spectrum& a : as) ad.push_back(a.to_doubles());
      auto verdict =
          check_majorized_float(ad, g.to_doubles(), opts.coefficient_one_only, opts.witness.tol);
      json doc;
      doc["mode"] = "float";
      doc["feasible"] = verdict.feasible;
      doc["min_slack"] = verdict.min_slack;
      doc["violations"] = verdict.violations;
      return finish(res, doc, verdict.feasible ? HC_OK : HC_INFEASIBLE);
    }
    FeasibilityReport report;
    switch (flavour) {
      case 0: report = check_majorized(as, g, opts.coefficient_one_only); break;
      case 1: report = check_klyachko_equality(as, g, opts.coefficient_one_only); break;
      default: report = check_reverse_majorized(as, g, opts.coefficient_one_only); break;
    }
    return finish(res, report_json(report), report.feasible ? HC_OK : HC_INFEASIBLE);
  });
}

}  // namespace

extern "C" {

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_INFEASIBLE: return "infeasible";
    case HC_USAGE: return "usage";
    case HC_BUDGET: return "budget";
    case HC_UNRESOLVED: return "unresolved";
    default: return "error";
  }
}

hc_options* hc_options_new(void) { return new (std::nothrow) hc_options; }
void hc_options_free(hc_options* options) { delete options; }

#define HC_OPTION_SETTER(name, member, type)                 \
  hc_status name(hc_options* options, type value) {          \
    if (!options) return HC_USAGE;                           \
    options->member = value;                                 \
    return HC_OK;                                            \
  }

HC_OPTION_SETTER(hc_options_set_seed, witness.seed, uint64_t)
HC_OPTION_SETTER(hc_options_set_trials, trials, int)
HC_OPTION_SETTER(hc_options_set_restarts, witness.restarts, int)
HC_OPTION_SETTER(hc_options_set_max_iterations, witness.max_iterations, int)
HC_OPTION_SETTER(hc_options_set_diagonal_budget, witness.diagonal_budget, long long)

hc_status hc_options_set_tolerance(hc_options* options, double tolerance) {
  if (!options || !(tolerance > 0)) return HC_USAGE;
  options->witness.tol = tolerance;
  return HC_OK;
}

hc_status hc_options_set_coefficient_one_only(hc_options* options, int flag) {
  if (!options) return HC_USAGE;
  options->coefficient_one_only = flag != 0;
  return HC_OK;
}

hc_status hc_options_set_float_mode(hc_options* options, int flag) {
  if (!options) return HC_USAGE;
  options->float_mode = flag != 0;
  return HC_OK;
}

hc_status hc_options_set_real_symmetric(hc_options* options, int flag) {
  if (!options) return HC_USAGE;
  options->witness.real_symmetric = flag != 0;
  return HC_OK;
}

void hc_result_free(hc_result* result) { delete result; }
const char* hc_result_json(const hc_result* result) {
  return result ? result->json_text.c_str() : "";
}
hc_status hc_result_status(const hc_result* result) { return result ? result->status : HC_USAGE; }
const char* hc_result_message(const hc_result* result) {
  return result ? result->message.c_str() : "";
}

hc_status hc_lr_coefficient(const char* lambda, const char* mu, const char* nu,
                            hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    Partition l = parse_partition(lambda, "lambda");
    Partition m = parse_partition(mu, "mu");
    Partition n = parse_partition(nu, "nu");
    json doc;
    doc["lambda"] = l.to_string();
    doc["mu"] = m.to_string();
    doc["nu"] = n.to_string();
    doc["coefficient"] = coefficient_json(lr_coefficient(l, m, n));
    return finish(res, doc, HC_OK);
  });
}

hc_status hc_schubert_product(const char* factors, int r, int n, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    if (r < 0 || n < r) throw std::invalid_argument("need 0 <= r <= n");
    if (!factors) throw std::invalid_argument("factors missing");
    std::vector<Partition> parts;
    std::string text(factors);
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string::npos) end = text.size();
      parts.push_back(parse_partition(text.substr(start, end - start).c_str(), "factor"));
      start = end + 1;
    }
    auto expansion = multi_product(parts, BoxBound{r, n - r});
    json doc;
    doc["r"] = r;
    doc["n"] = n;
    doc["degree"] = expansion.degree();
    json terms = json::object();
    for (const auto& [part, coeff] : expansion.terms)
      terms[part.to_string()] = coefficient_json(coeff);
    doc["terms"] = std::move(terms);
    return finish(res, doc, HC_OK);
  });
}

hc_status hc_lists(int r, int n, int m, int restrict_to_R, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    if (n < 1 || m < 1) throw std::invalid_argument("need n, m >= 1");
    if (r == 0 || r > n) throw std::invalid_argument("need 1 <= r <= n (or r < 0 for all)");
    std::vector<ListEntry> entries;
    if (r < 0)
      entries = restrict_to_R ? generate_R_all(n, m) : generate_S_all(n, m);
    else
      entries = restrict_to_R ? generate_R(r, n, m) : generate_S(r, n, m);
    json doc;
    doc["list"] = restrict_to_R ? "R" : "S";
    doc["n"] = n;
    doc["m"] = m;
    json rows = json::array();
    for (const auto& e : entries) rows.push_back(list_entry_json(e, n, m));
    doc["entries"] = std::move(rows);
    return finish(res, doc, HC_OK);
  });
}

hc_status hc_triples(int n, int m, int reverse, const hc_options* options, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    if (n < 1 || m < 1) throw std::invalid_argument("need n, m >= 1");
    bool c1 = options_or_default(options).coefficient_one_only;
    auto triples = reverse ? generate_reverse_triples(n, m, c1) : generate_horn_triples(n, m, c1);
    json doc;
    doc["flavour"] = reverse ? "reverse" : "forward";
    doc["n"] = n;
    doc["m"] = m;
    doc["coefficient_one_only"] = c1;
    doc["chamber_inequalities"] = (m + 1) * (n - 1);
    json rows = json::array();
    for (const auto& t : triples) rows.push_back(horn_triple_json(t, n, m));
    doc["entries"] = std::move(rows);
    return finish(res, doc, HC_OK);
  });
}

hc_status hc_check(const char* alphas, const char* gamma, const hc_options* options,
                   hc_result** result) {
  return check_common(alphas, gamma, options, result, 0);
}

hc_status hc_check_equality(const char* alphas, const char* gamma, const hc_options* options,
                            hc_result** result) {
  return check_common(alphas, gamma, options, result, 1);
}

hc_status hc_check_reverse(const char* alphas, const char* gamma, const hc_options* options,
                           hc_result** result) {
  return check_common(alphas, gamma, options, result, 2);
}

hc_status hc_lift(const char* alphas, const char* gamma, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    auto [as, g] = parse_instance(alphas, gamma);
    auto report = check_majorized(as, g);
    if (!report.feasible) return finish(res, report_json(report), HC_INFEASIBLE);
    Spectrum lifted = lift_gamma(as, g);
    json doc;
    doc["gamma"] = g.to_string();
    doc["lifted"] = lifted.to_string();
    doc["equality_feasible"] = check_klyachko_equality(as, lifted).feasible;
    return finish(res, doc, HC_OK);
  });
}

hc_status hc_shrink(const char* alphas, const char* gamma, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    auto [as, g] = parse_instance(alphas, gamma);
    auto report = check_majorized(as, g);
    if (!report.feasible) return finish(res, report_json(report), HC_INFEASIBLE);
    auto shrunk = shrink_alphas(as, g);
    json doc;
    doc["gamma"] = g.to_string();
    json rows = json::array();
    std::vector<Partition> parts;
    for (const auto& s : shrunk) {
      rows.push_back(s.to_string());
      parts.push_back(s.to_partition());
    }
    doc["shrunk"] = std::move(rows);
    doc["tensor_multiplicity"] = coefficient_json(tensor_multiplicity(parts, g.to_partition()));
    return finish(res, doc, HC_OK);
  });
}

hc_status hc_witness(const char* alphas, const char* gamma, const hc_options* options,
                     hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    if (!alphas) throw std::invalid_argument("alphas missing");
    auto as = parse_spectra(alphas);
    const auto& opts = options_or_default(options);
    WitnessResult witness;
    if (gamma) {
      Spectrum g = Spectrum::from_string(gamma);
      if (g.size() != as.at(0).size())
        throw std::invalid_argument("gamma length differs from the alpha spectra");
      witness = realize_majorized(as, g, opts.witness);
    } else {
      witness = realize_negative_sum(as, opts.witness);
    }
    hc_status status = witness.status == WitnessStatus::success      ? HC_OK
                       : witness.status == WitnessStatus::infeasible ? HC_INFEASIBLE
                                                                     : HC_UNRESOLVED;
    return finish(res, witness_json(witness), status);
  });
}

hc_status hc_modules(const char* alpha, const char* beta, const char* gamma, long long p,
                     hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    Partition a = parse_partition(alpha, "alpha");
    Partition b = parse_partition(beta, "beta");
    Partition g = parse_partition(gamma, "gamma");
    bool lr = exists_exact_sequence_lr(b, g, a);
    bool inequality = exists_exact_sequence_inequality(b, g, a);
    json doc;
    doc["alpha"] = a.to_string();
    doc["beta"] = b.to_string();
    doc["gamma"] = g.to_string();
    doc["p"] = p;
    doc["lr"] = lr;
    doc["inequality"] = inequality;
    try {
      bool brute = exists_exact_sequence_bruteforce(b, g, a, p);
      doc["bruteforce"] = brute;
      doc["agree"] = brute == lr && lr == inequality;
      return finish(res, doc, brute ? HC_OK : HC_INFEASIBLE);
    } catch (const BudgetExceeded& e) {
      doc["bruteforce"] = nullptr;
      doc["agree"] = lr == inequality;
      res.message = e.what();
      return finish(res, doc, HC_BUDGET);
    }
  });
}

hc_status hc_minimal(int n, int m, const hc_options* options, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    bool c1 = options_or_default(options).coefficient_one_only;
    auto report = check_full_independence(n, m, c1);
    return finish(res, redundancy_json(report), report.all_essential ? HC_OK : HC_INFEASIBLE);
  });
}

hc_status hc_verify_necessity(int n, int m, const hc_options* options, hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    const auto& opts = options_or_default(options);
    NecessityOptions config;
    config.trials = opts.trials;
    config.seed = opts.witness.seed;
    config.tol = opts.witness.tol;
    config.real_symmetric = opts.witness.real_symmetric;
    auto outcome = verify_necessity(n, m, config);
    return finish(res, necessity_json(outcome), outcome.violations == 0 ? HC_OK : HC_INFEASIBLE);
  });
}

hc_status hc_sweep(int max_weight, int max_n, int module_weight_p2, int module_weight_p3,
                   hc_result** result) {
  return run_guarded(result, [&](hc_result& res) {
    if (max_weight < 0 || max_n < 1 || module_weight_p2 < 0 || module_weight_p3 < 0)
      throw std::invalid_argument("sweep bounds must be nonnegative (max_n >= 1)");
    auto equivalence = run_equivalence_sweep(max_weight, max_n);
    auto modules = run_module_sweep(module_weight_p2, module_weight_p3);
    json doc;
    doc["equivalence"] = sweep_json(equivalence);
    doc["modules"] = sweep_json(modules);
    bool ok = equivalence.all_passed() && modules.all_passed();
    return finish(res, doc, ok ? HC_OK : HC_INFEASIBLE);
  });
}

}  // extern "C"
