#pragma once

#include <json.hpp>

#include "feasibility.hpp"
#include "hermitian.hpp"
#include "spectrum.hpp"

namespace horncone {

enum class WitnessStatus { success, infeasible, unresolved };

const char* witness_status_name(WitnessStatus s);

struct WitnessOptions {
  double tol = 1e-8;
  int restarts = 5;
  int max_iterations = 2000;
  std::uint64_t seed = 0;
  bool real_symmetric = false;
  // Exact diagonal-witness search is attempted first; 0 disables it.
  long long diagonal_budget = 50000;
};

struct WitnessResult {
  WitnessStatus status = WitnessStatus::unresolved;
  std::vector<Matrix> matrices;  // the A(s)
  Matrix C;                      // 0x0 unless a majorization problem
  double spectral_residual = 0;  // max deviation of achieved spectra from targets
  double slack_min_eigenvalue = 0;
  nlohmann::json split_tree;
};

/* Hermitian A(1..m) with the given spectra and sum(A) = 0 (trace must vanish
   exactly); exact diagonal search, then alternating projections. */
WitnessResult realize_sum_zero(const std::vector<Spectrum>& alphas, const WitnessOptions& opts);

/* Hermitian A(1..m) with the given spectra and sum(A) <= 0, by the recursive
   tight-split / epsilon-shift decomposition. */
WitnessResult realize_negative_sum(const std::vector<Spectrum>& alphas,
                                   const WitnessOptions& opts);

/* Hermitian A(1..m), C with the given spectra and C <= A(1) + ... + A(m);
   solved through the negated (m+1)-factor formulation. */
WitnessResult realize_majorized(const std::vector<Spectrum>& alphas, const Spectrum& gamma,
                                const WitnessOptions& opts);

// Clears the internal base-case memo (a pure speedup cache).
void witness_cache_clear();

}  // namespace horncone
