#include "minimality.hpp"

#include <stdexcept>

namespace horncone {

namespace {

const char* spectrum_label(int t, int m) { return t < m ? "alpha" : "gamma"; }

std::vector<LinearInequality> chamber_rows(int n, int spectra, int m) {
  std::vector<LinearInequality> out;
  for (int t = 0; t < spectra; ++t)
    for (int i = 0; i + 1 < n; ++i) {
      LinearInequality e;
      e.coeffs.assign(spectra * n, Rat(0));
      e.coeffs[t * n + i + 1] = 1;
      e.coeffs[t * n + i] = -1;
      e.origin = "chamber";
      std::string which = spectrum_label(t, m);
      if (t < m) which += "(" + std::to_string(t + 1) + ")";
      e.detail = which + ": entry " + std::to_string(i + 1) + " >= entry " + std::to_string(i + 2);
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace

std::vector<LinearInequality> assemble_system(int n, int m, bool coefficient_one_only) {
  if (n < 1 || m < 1) throw std::invalid_argument("assemble_system: need n, m >= 1");
  auto out = chamber_rows(n, m + 1, m);
  for (const auto& triple : generate_horn_triples(n, m, coefficient_one_only)) {
    LinearInequality e;
    e.coeffs.assign((m + 1) * n, Rat(0));
    for (int s = 0; s < m; ++s)
      for (int i : triple.sets[s].elements()) e.coeffs[s * n + i - 1] = -1;
    for (int k : triple.K.elements()) e.coeffs[m * n + k - 1] = 1;
    bool trace = triple.K.cardinality() == n;
    e.origin = trace ? "trace" : "horn";
    e.detail = triple.sets.to_string() + " -> " + triple.K.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LinearInequality> assemble_negative_sum_system(int n, int m, bool use_R_only) {
  if (n < 1 || m < 1) throw std::invalid_argument("assemble_negative_sum_system: need n, m >= 1");
  auto out = chamber_rows(n, m, m);
  const auto& list = use_R_only ? generate_R_all(n, m) : generate_S_all(n, m);
  for (const auto& entry : list) {
    LinearInequality e;
    e.coeffs.assign(m * n, Rat(0));
    for (int s = 0; s < m; ++s)
      for (int i : entry.tuple[s].elements()) e.coeffs[s * n + i - 1] = 1;
    e.origin = entry.tuple.cardinality() == n ? "trace" : "horn";
    e.detail = entry.tuple.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

Rat evaluate_inequality(const LinearInequality& e, const std::vector<Rat>& x) {
  if (x.size() != e.coeffs.size())
    throw std::invalid_argument("evaluate_inequality: dimension mismatch");
  Rat v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) v += e.coeffs[j] * x[j];
  return v;
}

RedundancyVerdict is_redundant(const std::vector<LinearInequality>& system, int index) {
  if (index < 0 || index >= static_cast<int>(system.size()))
    throw std::invalid_argument("is_redundant: index out of range");
  std::size_t dim = system[index].coeffs.size();
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int f = 0; f < static_cast<int>(system.size()); ++f) {
    if (f == index) continue;
    rows.push_back(system[f].coeffs);
    rhs.emplace_back(0);
  }
  // Normalize the candidate violation to value exactly 1.
  rows.push_back(system[index].coeffs);
  rhs.emplace_back(1);
  std::vector<Rat> negated(dim);
  for (std::size_t j = 0; j < dim; ++j) negated[j] = -system[index].coeffs[j];
  rows.push_back(std::move(negated));
  rhs.emplace_back(-1);

  auto point = solve_free_inequalities(rows, rhs);
  RedundancyVerdict verdict;
  if (!point) return verdict;  // redundant
  // Exact recheck: the witness must violate exactly this inequality.
  for (int f = 0; f < static_cast<int>(system.size()); ++f) {
    Rat v = evaluate_inequality(system[f], *point);
    if (f == index ? v != 1 : v > 0)
      throw std::logic_error("is_redundant: witness failed its exact recheck");
  }
  verdict.essential = true;
  verdict.witness = std::move(*point);
  return verdict;
}

RedundancyReport check_full_independence(int n, int m, bool coefficient_one_only, int max_n,
                                         int max_m) {
  if (n > max_n || m > max_m)
    throw BudgetExceeded("check_full_independence: configuration exceeds the LP budget");
  RedundancyReport report;
  report.n = n;
  report.m = m;
  report.system = assemble_system(n, m, coefficient_one_only);
  report.all_essential = true;
  for (int e = 0; e < static_cast<int>(report.system.size()); ++e) {
    report.verdicts.push_back(is_redundant(report.system, e));
    if (!report.verdicts.back().essential) report.all_essential = false;
  }
  report.conditional = n >= 3;
  return report;
}

}  // namespace horncone
