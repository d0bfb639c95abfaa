#pragma once

#include <optional>
#include <utility>

#include "horn_lists.hpp"
#include "spectrum.hpp"

namespace horncone {

/* One evaluated inequality.  slack = (right side) - (left side); the entry is
   satisfied iff slack >= 0 (or slack == 0 when equality is required). */
struct InequalityRecord {
  IndexTuple sets;
  std::optional<IndexSet> K;  // absent for negative-sum systems
  Rat slack;
  bool equality = false;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<InequalityRecord> violated;
  std::vector<InequalityRecord> tight;
  std::optional<int> max_tight_r;  // largest cardinality among tight entries
};

Rat set_sum(const Spectrum& x, const IndexSet& I);
Rat tuple_sum(const std::vector<Spectrum>& alphas, const IndexTuple& t);

/* Negative-sum system: sum_s sum_{i in I(s)} alpha_i(s) <= 0 for all tuples
   in S^n(m) (or R^n(m)). */
FeasibilityReport check_negative_sum(const std::vector<Spectrum>& alphas,
                                     bool use_R_only = false);
/* Majorization system: sum_K gamma <= sum_s sum_{I(s)} alpha(s) over the Horn
   triples, r <= n (r = n is the trace inequality). */
FeasibilityReport check_majorized(const std::vector<Spectrum>& alphas, const Spectrum& gamma,
                                  bool coefficient_one_only = true);
/* Equality (Klyachko) system: same triples with the trace as an equality. */
FeasibilityReport check_klyachko_equality(const std::vector<Spectrum>& alphas,
                                          const Spectrum& gamma,
                                          bool coefficient_one_only = true);
/* Reverse majorization: sum_s sum_{I(s)} alpha(s) <= sum_K gamma over the
   omega-flavoured triples (A(1)+...+A(m) <= C). */
FeasibilityReport check_reverse_majorized(const std::vector<Spectrum>& alphas,
                                          const Spectrum& gamma,
                                          bool coefficient_one_only = true);

// max over S^n(m) [R^n(m)] of the tuple sums; Belkale-Woodward: the two agree.
Rat max_tuple_sum(const std::vector<Spectrum>& alphas, bool use_R_only);

/* Index-compiled float path for sampling pipelines (exact on integer inputs). */
struct CompiledTriple {
  std::vector<std::pair<int, int>> alpha_terms;  // (factor, 0-based index)
  std::vector<int> gamma_terms;                  // 0-based indices
};
const std::vector<CompiledTriple>& compiled_majorized_triples(int n, int m,
                                                              bool coefficient_one_only);
struct FloatCheckResult {
  bool feasible = true;
  double min_slack = 0;  // most negative slack encountered when infeasible
  int violations = 0;
};
FloatCheckResult check_majorized_float(const std::vector<std::vector<double>>& alphas,
                                       const std::vector<double>& gamma,
                                       bool coefficient_one_only, double tol);

/* Split along a tight tuple: alpha'(s) = values of alpha(s) at I(s) (length r),
   alpha''(s) = the complementary values (length n-r).  Requires the tuple sum
   to vanish. */
std::pair<std::vector<Spectrum>, std::vector<Spectrum>> split(
    const std::vector<Spectrum>& alphas, const IndexTuple& tight);

/* For strictly feasible systems: the largest epsilon such that alpha + epsilon
   (added to every entry) still satisfies all of S^n(m); returns epsilon and the
   shifted spectra (at least one inequality becomes tight). */
std::pair<Rat, std::vector<Spectrum>> epsilon_shift(const std::vector<Spectrum>& alphas);

/* Unit lift: integral spectra satisfying S^n(m) are raised, one unit
   at a time and only in factor s0 (0-based), until the total sum is zero.
   Tie-breaks: if all inequalities are strict, increment alpha_1(s0); otherwise
   take r maximal with a tight tuple in S_r^n(m), the lex-smallest such tuple,
   and increment at the smallest index of [n] missing from I(s0). */
std::vector<Spectrum> lift_to_equality(std::vector<Spectrum> alphas, int s0);

/* Smallest-by-construction gamma~ >= gamma, integral, with the trace
   equality; realized by the unit lift on the negated system with the gamma
   slot as s0. */
Spectrum lift_gamma(const std::vector<Spectrum>& alphas, const Spectrum& gamma);

/* Partitions alpha~(s) inside alpha(s) with sum |alpha~| = |gamma| and
   V(gamma) occurring in the tensor product; first hit in lexicographic
   order of the tuple. */
std::vector<Spectrum> shrink_alphas(const std::vector<Spectrum>& alphas, const Spectrum& gamma);

}  // namespace horncone
