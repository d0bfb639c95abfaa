// horncone command-line tool.  All functionality is reached through the
// shared-library C API; this file only parses arguments and formats output.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "horncone/horncone.h"

namespace {

using nlohmann::json;

struct OptionsGuard {
  hc_options* ptr = hc_options_new();
  ~OptionsGuard() { hc_options_free(ptr); }
};

struct ResultGuard {
  hc_result* ptr = nullptr;
  ~ResultGuard() { hc_result_free(ptr); }
};

// Settings shared across subcommands; only the flags a subcommand registers
// can differ from these defaults.
struct Config {
  std::uint64_t seed = 0;
  double tol = 1e-8;
  bool all_coefficients = false;  // lifts the coefficient-1 restriction
  bool real_symmetric = false;
  bool float_mode = false;
  int trials = 1000;
  int restarts = 5;
  int max_iterations = 2000;
  long long diagonal_budget = 50000;
  int jobs = 1;
  std::string output;  // empty = stdout
};

void apply(const Config& cfg, hc_options* o) {
  hc_options_set_seed(o, cfg.seed);
  hc_options_set_tolerance(o, cfg.tol);
  hc_options_set_coefficient_one_only(o, cfg.all_coefficients ? 0 : 1);
  hc_options_set_real_symmetric(o, cfg.real_symmetric ? 1 : 0);
  hc_options_set_float_mode(o, cfg.float_mode ? 1 : 0);
  hc_options_set_trials(o, cfg.trials);
  hc_options_set_restarts(o, cfg.restarts);
  hc_options_set_max_iterations(o, cfg.max_iterations);
  hc_options_set_diagonal_budget(o, cfg.diagonal_budget);
}

int exit_code(hc_status status) {
  switch (status) {
    case HC_OK: return 0;
    case HC_INFEASIBLE: return 1;
    case HC_USAGE: return 2;
    case HC_BUDGET: return 3;
    case HC_UNRESOLVED: return 3;  // witness budget exhausted without a verdict
    default: return 2;
  }
}

int emit_text(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.output);
  if (!out) {
    std::cerr << "horncone: cannot open output file: " << cfg.output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

// Runs one API call and emits its JSON document (or JSON lines drawn from
// doc[lines_key] when lines_key is nonempty).
int run_op(const Config& cfg, const std::function<hc_status(hc_result**)>& op,
           const std::string& lines_key = "") {
  ResultGuard res;
  hc_status status = op(&res.ptr);
  std::string message = hc_result_message(res.ptr);
  if (!message.empty()) std::cerr << "horncone: " << message << "\n";
  std::string body;
  if (lines_key.empty()) {
    body = std::string(hc_result_json(res.ptr)) + "\n";
  } else {
    json doc = json::parse(hc_result_json(res.ptr));
    for (const auto& line : doc.value(lines_key, json::array())) body += line.dump() + "\n";
    if (doc.contains("chamber_inequalities"))
      std::cerr << "note: " << doc["chamber_inequalities"].get<int>()
                << " chamber inequalities (weakly decreasing entries within each "
                   "spectrum) accompany these entries\n";
  }
  int file_error = emit_text(cfg, body);
  return file_error ? file_error : exit_code(status);
}

std::string format_complex(double re, double im) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", re, im);
  return buf;
}

// Plain-text rendering of a witness: 17-significant-digit complex entries.
std::string witness_text(const json& doc) {
  std::string out = "status " + doc["status"].get<std::string>() + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", doc["spectral_residual"].get<double>());
  out += std::string("spectral_residual ") + buf + "\n";
  std::snprintf(buf, sizeof(buf), "%.17g", doc["slack_min_eigenvalue"].get<double>());
  out += std::string("slack_min_eigenvalue ") + buf + "\n";
  auto print_matrix = [&out](const std::string& name, const json& rows) {
    out += name + " " + std::to_string(rows.size()) + "\n";
    for (const auto& row : rows) {
      std::string line;
      for (const auto& entry : row) {
        if (!line.empty()) line += "\t";
        line += format_complex(entry[0].get<double>(), entry[1].get<double>());
      }
      out += line + "\n";
    }
  };
  int index = 1;
  for (const auto& rows : doc["matrices"]) print_matrix("A(" + std::to_string(index++) + ")", rows);
  if (!doc["C"].is_null()) print_matrix("C", doc["C"]);
  return out;
}

// Aligned pass/fail table for the sweep subcommand.
std::string sweep_table(const json& doc) {
  std::size_t width = 4;
  for (const auto& group : {"equivalence", "modules"})
    for (const auto& c : doc[group]["cases"])
      width = std::max(width, c["name"].get<std::string>().size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s  %8s  %8s  %s\n", (int)width, "case", "checked",
                "failures", "result");
  out += line;
  out += std::string(width + 30, '-') + "\n";
  bool all = true;
  for (const auto& group : {"equivalence", "modules"}) {
    for (const auto& c : doc[group]["cases"]) {
      bool pass = c["failures"].get<long long>() == 0;
      all = all && pass;
      std::snprintf(line, sizeof(line), "%-*s  %8lld  %8lld  %s\n", (int)width,
                    c["name"].get<std::string>().c_str(), c["checked"].get<long long>(),
                    c["failures"].get<long long>(), pass ? "pass" : "FAIL");
      out += line;
    }
  }
  out += std::string(width + 30, '-') + "\n";
  out += std::string("overall: ") + (all ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra feasibility for Hermitian sums: Horn inequalities,\n"
               "Littlewood-Richardson coefficients, witnesses, and module analogues."};
  app.set_version_flag("--version", "horncone 1.0.0");
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--jobs", cfg.jobs, "Upper bound on worker parallelism (engines are serial)")
      ->envname("HORNCONE_JOBS")
      ->check(CLI::PositiveNumber);

  int rc = 0;
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", cfg.output, "Write the report to this file instead of stdout");
  };

  // ---- lrcoef ----
  std::string arg_lambda, arg_mu, arg_nu;
  auto* lrcoef = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient c_{lambda,mu}^nu");
  lrcoef->add_option("lambda", arg_lambda, "First partition, e.g. 2,1")->required();
  lrcoef->add_option("mu", arg_mu, "Second partition")->required();
  lrcoef->add_option("nu", arg_nu, "Target partition")->required();
  add_output(lrcoef);
  lrcoef->callback([&] {
    rc = run_op(cfg, [&](hc_result** out) {
      return hc_lr_coefficient(arg_lambda.c_str(), arg_mu.c_str(), arg_nu.c_str(), out);
    });
  });

  // ---- product ----
  std::string arg_factors;
  int arg_r = -1, arg_n = 0, arg_m = 2;
  auto* product = app.add_subcommand("product", "Expand a product of Schubert classes in Gr(r, n)");
  product->add_option("factors", arg_factors, "Partitions separated by ';', e.g. 1;1")->required();
  product->add_option("--r", arg_r, "Subspace dimension r")->required();
  product->add_option("--n", arg_n, "Ambient dimension n")->required();
  add_output(product);
  product->callback([&] {
    rc = run_op(cfg, [&](hc_result** out) {
      return hc_schubert_product(arg_factors.c_str(), arg_r, arg_n, out);
    });
  });

  // ---- lists ----
  bool arg_R_only = false;
  auto* lists = app.add_subcommand("lists", "Emit the S- or R-lists of index-set tuples (JSONL)");
  lists->add_option("--r", arg_r, "Cardinality r; omit for every 1 <= r <= n");
  lists->add_option("--n", arg_n, "Matrix size n")->required();
  lists->add_option("--m", arg_m, "Number of summands m")->required();
  lists->add_flag("--R-only", arg_R_only, "Restrict to coefficient-1 tuples (the R-list)");
  add_output(lists);
  lists->callback([&] {
    rc = run_op(
        cfg,
        [&](hc_result** out) { return hc_lists(arg_r, arg_n, arg_m, arg_R_only ? 1 : 0, out); },
        "entries");
  });

  // ---- triples ----
  bool arg_reverse = false;
  auto* triples = app.add_subcommand("triples", "Emit the Horn inequality triples (JSONL)");
  triples->add_option("--n", arg_n, "Matrix size n")->required();
  triples->add_option("--m", arg_m, "Number of summands m")->required();
  triples->add_flag("--reverse", arg_reverse, "Triples for the reverse (C >= sum) problem");
  triples->add_flag("--all-coefficients", cfg.all_coefficients,
                    "Use the full S-lists instead of the coefficient-1 R-lists");
  add_output(triples);
  triples->callback([&] {
    OptionsGuard o;
    apply(cfg, o.ptr);
    rc = run_op(
        cfg,
        [&](hc_result** out) { return hc_triples(arg_n, arg_m, arg_reverse ? 1 : 0, o.ptr, out); },
        "entries");
  });

  // ---- check / check-eq / check-rev ----
  std::string arg_alphas, arg_gamma;
  auto add_instance = [&](CLI::App* cmd, bool gamma_required) {
    cmd->add_option("--alphas", arg_alphas,
                    "Spectra of the summands, ';'-separated (e.g. 1,0;1/2,0)")
        ->required();
    auto* g = cmd->add_option("--gamma", arg_gamma, "Spectrum of C");
    if (gamma_required) g->required();
    add_output(cmd);
  };
  auto add_check = [&](const char* name, const char* help,
                       hc_status (*fn)(const char*, const char*, const hc_options*,
                                       hc_result**)) {
    auto* cmd = app.add_subcommand(name, help);
    add_instance(cmd, true);
    cmd->add_flag("--all-coefficients", cfg.all_coefficients,
                  "Use the full S-lists instead of the coefficient-1 R-lists");
    if (fn == &hc_check) {
      cmd->add_flag("--float", cfg.float_mode, "Evaluate the system in floating point");
      cmd->add_option("--tol", cfg.tol, "Tolerance for --float")->capture_default_str();
    }
    cmd->callback([&, fn] {
      OptionsGuard o;
      apply(cfg, o.ptr);
      rc = run_op(cfg, [&](hc_result** out) {
        return fn(arg_alphas.c_str(), arg_gamma.c_str(), o.ptr, out);
      });
    });
    return cmd;
  };
  add_check("check", "Decide whether C <= A(1)+...+A(m) is realizable (exit 0/1)", hc_check);
  add_check("check-eq", "Decide the equality problem C = A(1)+...+A(m)", hc_check_equality);
  add_check("check-rev", "Decide the reverse problem C >= A(1)+...+A(m)", hc_check_reverse);

  // ---- lift ----
  auto* lift = app.add_subcommand("lift", "Lift gamma to gamma~ >= gamma realizing equality");
  add_instance(lift, true);
  lift->callback([&] {
    rc = run_op(cfg, [&](hc_result** out) {
      return hc_lift(arg_alphas.c_str(), arg_gamma.c_str(), out);
    });
  });

  // ---- shrink ----
  auto* shrink =
      app.add_subcommand("shrink", "Shrink the alphas to alpha~(s) <= alpha(s) realizing equality");
  add_instance(shrink, true);
  shrink->callback([&] {
    rc = run_op(cfg, [&](hc_result** out) {
      return hc_shrink(arg_alphas.c_str(), arg_gamma.c_str(), out);
    });
  });

  // ---- witness ----
  bool arg_text = false;
  auto* witness = app.add_subcommand(
      "witness", "Construct Hermitian matrices realizing the instance (sum <= 0 if no gamma)");
  add_instance(witness, false);
  witness->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  witness->add_option("--tol", cfg.tol, "Numerical tolerance")->capture_default_str();
  witness->add_option("--restarts", cfg.restarts, "Projection restarts")->capture_default_str();
  witness->add_option("--max-iterations", cfg.max_iterations, "Projection iterations per restart")->capture_default_str();
  witness->add_option("--diagonal-budget", cfg.diagonal_budget,
                      "Permutation budget for the exact diagonal search (0 disables)")->capture_default_str();
  witness->add_flag("--real-symmetric", cfg.real_symmetric, "Produce real symmetric matrices");
  witness->add_flag("--text", arg_text, "Plain-text matrices (17 significant digits)");
  witness->callback([&] {
    OptionsGuard o;
    apply(cfg, o.ptr);
    ResultGuard res;
    hc_status status = hc_witness(arg_alphas.c_str(),
                                  arg_gamma.empty() ? nullptr : arg_gamma.c_str(), o.ptr, &res.ptr);
    std::string message = hc_result_message(res.ptr);
    if (!message.empty()) std::cerr << "horncone: " << message << "\n";
    std::string body;
    if (status == HC_USAGE || status == HC_ERROR)
      body = std::string(hc_result_json(res.ptr)) + "\n";
    else
      body = arg_text ? witness_text(json::parse(hc_result_json(res.ptr)))
                      : std::string(hc_result_json(res.ptr)) + "\n";
    int file_error = emit_text(cfg, body);
    rc = file_error ? file_error : exit_code(status);
  });

  // ---- modules ----
  std::string arg_alpha, arg_beta, arg_gamma2;
  long long arg_p = 2;
  auto* modules = app.add_subcommand(
      "modules", "Exact-sequence existence for finite modules over Z_p (three criteria)");
  modules->add_option("--alpha", arg_alpha, "Type of the quotient-side module A")->required();
  modules->add_option("--beta", arg_beta, "Type of the subgroup-side module B")->required();
  modules->add_option("--gamma", arg_gamma2, "Type of the middle module C")->required();
  modules->add_option("--p", arg_p, "Prime p")->capture_default_str();
  add_output(modules);
  modules->callback([&] {
    rc = run_op(cfg, [&](hc_result** out) {
      return hc_modules(arg_alpha.c_str(), arg_beta.c_str(), arg_gamma2.c_str(), arg_p, out);
    });
  });

  // ---- minimal ----
  auto* minimal =
      app.add_subcommand("minimal", "LP-check that every inequality of the system is essential");
  minimal->add_option("--n", arg_n, "Matrix size n")->required();
  minimal->add_option("--m", arg_m, "Number of summands m")->required();
  minimal->add_flag("--all-coefficients", cfg.all_coefficients,
                    "Audit the full S-list system instead of the R-list system");
  add_output(minimal);
  minimal->callback([&] {
    OptionsGuard o;
    apply(cfg, o.ptr);
    rc = run_op(cfg, [&](hc_result** out) { return hc_minimal(arg_n, arg_m, o.ptr, out); });
  });

  // ---- verify-necessity ----
  auto* necessity = app.add_subcommand(
      "verify-necessity", "Monte Carlo: random instances with PSD slack never violate the system");
  necessity->add_option("--n", arg_n, "Matrix size n")->required();
  necessity->add_option("--m", arg_m, "Number of summands m")->required();
  necessity->add_option("--trials", cfg.trials, "Number of random instances")->capture_default_str();
  necessity->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  necessity->add_option("--tol", cfg.tol, "Violation tolerance")->capture_default_str();
  necessity->add_flag("--real-symmetric", cfg.real_symmetric, "Sample real symmetric matrices");
  add_output(necessity);
  necessity->callback([&] {
    OptionsGuard o;
    apply(cfg, o.ptr);
    rc = run_op(cfg,
                [&](hc_result** out) { return hc_verify_necessity(arg_n, arg_m, o.ptr, out); });
  });

  // ---- sweep ----
  int arg_max_weight = 5, arg_max_n = 3, arg_mw_p2 = 5, arg_mw_p3 = 4;
  auto* sweep = app.add_subcommand(
      "sweep", "Exhaustive small-instance equivalence suites with a pass/fail summary table");
  sweep->add_option("--max-weight", arg_max_weight, "Partition weight bound for the equivalences")->capture_default_str();
  sweep->add_option("--max-n", arg_max_n, "Length bound for the equivalences")->capture_default_str();
  sweep->add_option("--module-weight-p2", arg_mw_p2, "Module-triple weight bound at p=2")->capture_default_str();
  sweep->add_option("--module-weight-p3", arg_mw_p3, "Module-triple weight bound at p=3")->capture_default_str();
  add_output(sweep);
  sweep->callback([&] {
    ResultGuard res;
    hc_status status = hc_sweep(arg_max_weight, arg_max_n, arg_mw_p2, arg_mw_p3, &res.ptr);
    std::string message = hc_result_message(res.ptr);
    if (!message.empty()) std::cerr << "horncone: " << message << "\n";
    if (status == HC_USAGE || status == HC_ERROR) {
      rc = exit_code(status);
      return;
    }
    json doc = json::parse(hc_result_json(res.ptr));
    std::string table = sweep_table(doc);
    // stdout stays machine-readable: the table goes wherever the JSON is not.
    if (cfg.output.empty()) {
      std::cout << doc.dump() << "\n";
      std::cerr << table;
      rc = exit_code(status);
    } else {
      int file_error = emit_text(cfg, doc.dump() + "\n");
      std::cout << table;
      rc = file_error ? file_error : exit_code(status);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
