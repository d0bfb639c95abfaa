#pragma once

#include <cstdint>

namespace horncone {

struct NecessityOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int spectrum_range = 3;  // integer spectra drawn from [-range, range]
  bool real_symmetric = false;
};

struct NecessityOutcome {
  int trials = 0;
  int violations = 0;      // samples with a slack below -tol
  double worst_slack = 0;  // most negative slack observed (0 when none)
};

/* Monte Carlo necessity check: sample A(s) = U_s diag(alpha(s)) U_s^H with
   random integer spectra, subtract a random PSD matrix to get C, read gamma
   off C, and confirm the majorization inequalities hold within tol.  Fully
   deterministic for a fixed (n, m, options). */
NecessityOutcome verify_necessity(int n, int m, const NecessityOptions& opts);

}  // namespace horncone
