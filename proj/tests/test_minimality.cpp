#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "feasibility.hpp"
#include "minimality.hpp"

using namespace horncone;

namespace {

std::vector<Rat> rats(std::initializer_list<int> v) { return std::vector<Rat>(v.begin(), v.end()); }

int count_origin(const std::vector<LinearInequality>& sys, const std::string& origin) {
  int c = 0;
  for (const auto& e : sys) c += e.origin == origin;
  return c;
}

}  // namespace

TEST_CASE("exact simplex on textbook problems") {
  // max x1 + x2 with x1 <= 2, x2 <= 3, x1 + x2 <= 4.
  auto lp = simplex_solve({rats({1, 0}), rats({0, 1}), rats({1, 1})}, rats({2, 3, 4}),
                          rats({1, 1}));
  REQUIRE(lp.status == LpStatus::optimal);
  CHECK(lp.objective == Rat(4));

  // Fractional optimum: max 2x with 3x <= 1.
  lp = simplex_solve({rats({3})}, rats({1}), rats({2}));
  REQUIRE(lp.status == LpStatus::optimal);
  CHECK(lp.objective == Rat(2, 3));
  CHECK(lp.solution[0] == Rat(1, 3));

  // Infeasible over x >= 0: x <= -1.
  lp = simplex_solve({rats({1})}, rats({-1}), rats({0}));
  CHECK(lp.status == LpStatus::infeasible);

  // Unbounded: max x with -x <= 1.
  lp = simplex_solve({rats({-1})}, rats({1}), rats({1}));
  CHECK(lp.status == LpStatus::unbounded);

  // Equality pair forcing a negative value through phase 1.
  lp = simplex_solve({rats({1, 1}), rats({-1, -1}), rats({-1, 0})}, {Rat(2), Rat(-2), Rat(3)},
                     rats({0, 1}));
  REQUIRE(lp.status == LpStatus::optimal);
  CHECK(lp.objective == Rat(2));
}

TEST_CASE("free-variable feasibility") {
  // x <= -5 has the solution x = -5 among free variables.
  auto x = solve_free_inequalities({rats({1})}, {Rat(-5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] <= Rat(-5));

  // 3 <= x <= 1 is empty.
  CHECK(!solve_free_inequalities({rats({1}), rats({-1})}, {Rat(1), Rat(-3)}).has_value());

  // Two-variable strip with a forced negative coordinate.
  auto y = solve_free_inequalities({rats({1, 1}), rats({-1, -1}), rats({0, 1})},
                                   {Rat(-2), Rat(2), Rat(0)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Rat(-2));
  CHECK((*y)[1] <= Rat(0));
}

TEST_CASE("assembled system shapes") {
  CHECK(assemble_system(1, 2, true).size() == 1);

  auto seven = assemble_system(2, 2, true);
  CHECK(seven.size() == 7);
  CHECK(count_origin(seven, "chamber") == 3);
  CHECK(count_origin(seven, "horn") == 3);
  CHECK(count_origin(seven, "trace") == 1);

  for (int m = 2; m <= 4; ++m)
    CHECK(assemble_negative_sum_system(2, m, true).size() == 2 * m + 1);
}

TEST_CASE("the seven n = 2 inequalities are independent") {
  auto sys = assemble_system(2, 2, true);
  for (int e = 0; e < (int)sys.size(); ++e) {
    auto verdict = is_redundant(sys, e);
    CHECK(verdict.essential);
    REQUIRE(!verdict.witness.empty());
    // The triple-row witnesses have sorted blocks, hence parse as spectra and
    // must fail the full majorization check through exactly this inequality.
    if (sys[e].origin == "chamber") continue;
    const auto& w = verdict.witness;
    auto block = [&](int t) {
      return Spectrum(std::vector<Rat>{w[2 * t], w[2 * t + 1]});
    };
    auto rep = check_majorized({block(0), block(1)}, block(2));
    CHECK(!rep.feasible);
    REQUIRE(rep.violated.size() == 1);
    std::string detail = rep.violated[0].sets.to_string() + " -> " +
                         (rep.violated[0].K ? rep.violated[0].K->to_string() : "");
    CHECK(detail == sys[e].detail);
  }
}

TEST_CASE("duplicated rows are redundant") {
  auto sys = assemble_system(2, 2, true);
  sys.push_back(sys[0]);
  CHECK(!is_redundant(sys, (int)sys.size() - 1).essential);
  CHECK(!is_redundant(sys, 0).essential);
}

TEST_CASE("boundary triple at n = 3 touches only the trace") {
  Spectrum b = Spectrum::from_string("2,0,-2");
  auto rep = check_majorized({b, b}, b);
  CHECK(rep.feasible);
  REQUIRE(rep.tight.size() == 1);
  CHECK(rep.tight[0].sets.cardinality() == 3);
  REQUIRE(rep.max_tight_r.has_value());
  CHECK(*rep.max_tight_r == 3);
}

TEST_CASE("full independence for small configurations") {
  for (int n = 1; n <= 3; ++n) {
    auto report = check_full_independence(n, 2);
    CHECK(report.all_essential);
    CHECK(report.conditional == (n >= 3));
    CHECK(report.verdicts.size() == report.system.size());
  }
  CHECK_THROWS_AS(check_full_independence(5, 2), BudgetExceeded);
  CHECK_THROWS_AS(check_full_independence(2, 4), BudgetExceeded);
}

TEST_CASE("the S-system adds nothing to the R-system") {
  // n = 4, m = 2: the S-list strictly contains the R-list; every extra
  // inequality must be implied by the R-system.
  auto r_system = assemble_negative_sum_system(4, 2, true);
  auto s_system = assemble_negative_sum_system(4, 2, false);
  REQUIRE(s_system.size() > r_system.size());
  std::set<std::string> r_details;
  for (const auto& e : r_system) r_details.insert(e.detail);
  int extras = 0;
  for (const auto& e : s_system) {
    if (e.origin == "chamber" || r_details.count(e.detail)) continue;
    ++extras;
    auto extended = r_system;
    extended.push_back(e);
    CHECK(!is_redundant(extended, (int)extended.size() - 1).essential);
  }
  CHECK(extras == 26);
}
