#pragma once

#include <string>
#include <vector>

#include "budget.hpp"
#include "horn_lists.hpp"
#include "simplex.hpp"

namespace horncone {

/* One homogeneous inequality coeffs.x <= 0 over the concatenated spectrum
   variables alpha(1), ..., alpha(m), gamma (layout: factor-major, n entries
   each; (m+1)*n variables in total). */
struct LinearInequality {
  std::vector<Rat> coeffs;
  std::string origin;  // "chamber" | "horn" | "trace"
  std::string detail;  // human-readable description of the source
};

/* The majorization cone for (n, m): ordering inequalities for every spectrum
   plus the triple inequalities (r = n being the trace). */
std::vector<LinearInequality> assemble_system(int n, int m, bool coefficient_one_only);

/* The negative-sum cone over m factors (no gamma block; m*n variables). */
std::vector<LinearInequality> assemble_negative_sum_system(int n, int m, bool use_R_only);

struct RedundancyVerdict {
  bool essential = false;
  std::vector<Rat> witness;  // nonempty iff essential; violates exactly this row
};

/* Essential iff some point satisfies every other inequality but violates the
   chosen one (normalized to value 1); decided by the exact simplex. */
RedundancyVerdict is_redundant(const std::vector<LinearInequality>& system, int index);

struct RedundancyReport {
  int n = 0, m = 0;
  std::vector<LinearInequality> system;
  std::vector<RedundancyVerdict> verdicts;
  bool all_essential = false;
  // Minimality for n >= 3 leans on an announced classification; the empirical
  // LP confirmation is evidence, not proof, and is labelled as such.
  bool conditional = false;
};

// Budget: n <= 4 and m <= 3 by default.
RedundancyReport check_full_independence(int n, int m, bool coefficient_one_only = true,
                                         int max_n = 4, int max_m = 3);

// Exact evaluation used to recheck witnesses.
Rat evaluate_inequality(const LinearInequality& e, const std::vector<Rat>& x);

}  // namespace horncone
