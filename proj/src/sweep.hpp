#pragma once

#include <string>
#include <vector>

namespace horncone {

struct SweepCase {
  std::string name;
  long long checked = 0;
  long long failures = 0;
};

struct SweepReport {
  std::vector<SweepCase> cases;
  bool all_passed() const {
    for (const auto& c : cases)
      if (c.failures != 0) return false;
    return true;
  }
};

/* Equivalence sweep for the majorization characterizations with two factors:
   the inequality criterion, the lifted-gamma route, the shrunken-alpha route,
   and the grown-gamma tensor route must agree on every partition triple with
   weights up to max_weight and lengths up to max_n. */
SweepReport run_equivalence_sweep(int max_weight = 5, int max_n = 3);

/* Module-oracle sweep: brute-force exact-sequence existence over Z/p^N versus
   the LR and inequality routes, exhaustively up to the given weights. */
SweepReport run_module_sweep(int max_weight_p2 = 5, int max_weight_p3 = 4);

}  // namespace horncone
