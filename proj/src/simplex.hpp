#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace horncone {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective;
  std::vector<Rat> solution;
};

/* Exact two-phase primal simplex with Bland's rule (no cycling, no
   tolerances): maximize c.x subject to a.x <= b, x >= 0. */
LpResult simplex_solve(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                       const std::vector<Rat>& c);

/* Feasibility of a.x <= b over free (sign-unrestricted) x, via the standard
   x = u - v doubling; any feasible point is returned. */
std::optional<std::vector<Rat>> solve_free_inequalities(const std::vector<std::vector<Rat>>& a,
                                                        const std::vector<Rat>& b);

}  // namespace horncone
