#include "necessity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "feasibility.hpp"
#include "hermitian.hpp"

namespace horncone {

NecessityOutcome verify_necessity(int n, int m, const NecessityOptions& opts) {
  if (n < 1 || m < 1) throw std::invalid_argument("verify_necessity: need n, m >= 1");
  NecessityOutcome outcome;
  Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(n) * 1000003u + m));
  const int range = std::max(opts.spectrum_range, 1);
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::vector<std::vector<double>> alphas(m);
    Matrix sum = Matrix::Zero(n, n);
    for (int s = 0; s < m; ++s) {
      std::vector<double> spectrum(n);
      for (double& v : spectrum)
        v = static_cast<double>(static_cast<int>(rng.uniform() * (2 * range + 1)) - range);
      std::sort(spectrum.rbegin(), spectrum.rend());
      sum += sample_with_spectrum(spectrum, rng, opts.real_symmetric);
      alphas[s] = std::move(spectrum);
    }
    // Subtract a random PSD part; the majorization C <= sum A(s) holds by
    // construction, so every inequality must be satisfied up to roundoff.
    std::vector<double> psd(n);
    for (double& v : psd) v = rng.uniform() * range;
    std::sort(psd.rbegin(), psd.rend());
    Matrix c = sum - sample_with_spectrum(psd, rng, opts.real_symmetric);
    auto [gamma, vecs] = eig_hermitian(c);

    auto check = check_majorized_float(alphas, gamma, true, opts.tol);
    ++outcome.trials;
    if (!check.feasible) {
      ++outcome.violations;
      outcome.worst_slack = std::min(outcome.worst_slack, check.min_slack);
    }
  }
  return outcome;
}

}  // namespace horncone
