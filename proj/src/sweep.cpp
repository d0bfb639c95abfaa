#include "sweep.hpp"

#include <stdexcept>

#include "dvr.hpp"
#include "feasibility.hpp"
#include "lr.hpp"

namespace horncone {

namespace {

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& p : partitions_of_weight(w, std::max(max_len, 1), std::max(w, 1)))
      out.push_back(p);
  return out;
}

Spectrum padded(const Partition& p, int n) {
  std::vector<Rat> vals;
  for (int i = 0; i < n; ++i) vals.emplace_back(p[i]);
  return Spectrum(std::move(vals));
}

bool lifted_gamma_route(const std::vector<Spectrum>& ab, const Spectrum& g) {
  try {
    Spectrum lifted = lift_gamma(ab, g);
    for (int i = 0; i < g.size(); ++i)
      if (lifted[i] < g[i]) return false;
    return check_klyachko_equality(ab, lifted).feasible;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool shrunken_alpha_route(const std::vector<Spectrum>& ab, const Spectrum& g) {
  try {
    return !shrink_alphas(ab, g).empty();
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// A partition gamma~ containing gamma, of length <= n and full weight
// |alpha| + |beta|, with c_{alpha beta}^{gamma~} > 0.
bool grown_gamma_route(const Partition& a, const Partition& b, const Partition& g, int n) {
  int w = a.weight() + b.weight();
  if (g.weight() > w) return false;
  for (const auto& cand : partitions_of_weight(w, n, std::max(w, 1))) {
    if (!cand.contains(g)) continue;
    if (lr_coefficient(a, b, cand) > 0) return true;
  }
  return false;
}

}  // namespace

SweepReport run_equivalence_sweep(int max_weight, int max_n) {
  SweepReport report;
  for (int n = 1; n <= max_n; ++n) {
    SweepCase inequality_vs_lift{"n=" + std::to_string(n) + " inequality == lifted-gamma", 0, 0};
    SweepCase inequality_vs_shrink{"n=" + std::to_string(n) + " inequality == shrunken-alpha", 0,
                                   0};
    SweepCase inequality_vs_grow{"n=" + std::to_string(n) + " inequality == grown-gamma", 0, 0};
    auto parts = partitions_up_to(max_weight, n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& g : parts) {
          std::vector<Spectrum> ab = {padded(a, n), padded(b, n)};
          Spectrum gs = padded(g, n);
          bool base = check_majorized(ab, gs).feasible;
          ++inequality_vs_lift.checked;
          if (base != lifted_gamma_route(ab, gs)) ++inequality_vs_lift.failures;
          ++inequality_vs_shrink.checked;
          if (base != shrunken_alpha_route(ab, gs)) ++inequality_vs_shrink.failures;
          ++inequality_vs_grow.checked;
          if (base != grown_gamma_route(a, b, g, n)) ++inequality_vs_grow.failures;
        }
    report.cases.push_back(inequality_vs_lift);
    report.cases.push_back(inequality_vs_shrink);
    report.cases.push_back(inequality_vs_grow);
  }
  return report;
}

SweepReport run_module_sweep(int max_weight_p2, int max_weight_p3) {
  SweepReport report;
  for (long long p : {2LL, 3LL}) {
    int max_weight = p == 2 ? max_weight_p2 : max_weight_p3;
    SweepCase vs_lr{"p=" + std::to_string(p) + " bruteforce == lr", 0, 0};
    SweepCase vs_ineq{"p=" + std::to_string(p) + " bruteforce == inequality", 0, 0};
    auto parts = partitions_up_to(max_weight, max_weight);
    for (const auto& beta : parts)
      for (const auto& gamma : parts)
        for (const auto& alpha : parts) {
          bool brute = exists_exact_sequence_bruteforce(beta, gamma, alpha, p);
          ++vs_lr.checked;
          if (brute != exists_exact_sequence_lr(beta, gamma, alpha)) ++vs_lr.failures;
          ++vs_ineq.checked;
          if (brute != exists_exact_sequence_inequality(beta, gamma, alpha)) ++vs_ineq.failures;
        }
    report.cases.push_back(vs_lr);
    report.cases.push_back(vs_ineq);
  }
  return report;
}

}  // namespace horncone
