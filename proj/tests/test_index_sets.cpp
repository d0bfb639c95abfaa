#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "index_set.hpp"
#include "lr.hpp"

using namespace horncone;

TEST_CASE("index set construction and complement") {
  IndexSet I({2, 4}, 5);
  CHECK(I.cardinality() == 2);
  CHECK(I.contains(4));
  CHECK_FALSE(I.contains(3));
  CHECK(I.complement() == IndexSet({1, 3, 5}, 5));
  CHECK(I.to_string() == "{2,4}");
  CHECK(IndexSet::from_string("{2,4}", 5) == I);
  CHECK(IndexSet::from_string("2,4", 5) == I);
  CHECK_THROWS_AS(IndexSet({2, 2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({0, 2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({2, 6}, 5), std::invalid_argument);
}

TEST_CASE("restrict and extend") {
  IndexSet I({2, 4, 5}, 7);
  CHECK(restrict_to(I, IndexSet({1, 3}, 3)) == IndexSet({2, 5}, 7));
  // I^c = {1,3,6,7}; extending by positions {2,4} adds {3,7}.
  CHECK(extend_by(I, IndexSet({2, 4}, 4)) == IndexSet({2, 3, 4, 5, 7}, 7));
  CHECK_THROWS_AS(restrict_to(I, IndexSet({4}, 4)), std::invalid_argument);
}

TEST_CASE("partial order two formulations agree") {
  for (const IndexSet& H : all_subsets(6, 3)) {
    for (const IndexSet& I : all_subsets(6, 3)) {
      CHECK(leq(H, I) == leq_by_prefix_counts(H, I));
    }
  }
  CHECK(leq(IndexSet({1, 2}, 4), IndexSet({3, 4}, 4)));
  CHECK_FALSE(leq(IndexSet({2, 3}, 4), IndexSet({1, 4}, 4)));
}

TEST_CASE("all_subsets lex order and count") {
  auto v = all_subsets(4, 2);
  REQUIRE(v.size() == 6);
  CHECK(v.front() == IndexSet({1, 2}, 4));
  CHECK(v[1] == IndexSet({1, 3}, 4));
  CHECK(v.back() == IndexSet({3, 4}, 4));
  CHECK(all_subsets(5, 0).size() == 1);
  CHECK(all_subsets(5, 5).size() == 1);
}

TEST_CASE("index set to partition maps") {
  // lambda({2,4} in [4]) = (4-2, 2-1) = (2,1).
  CHECK(lambda_of_index_set(IndexSet({2, 4}, 4)) == Partition{2, 1});
  // omega({2,4} in [4]): lambda_k = n-r+k-i_k = (2+1-2, 2+2-4) = (1,0).
  CHECK(omega_partition(IndexSet({2, 4}, 4)) == Partition{1});
  CHECK(lambda_of_index_set(IndexSet({1, 2, 3}, 6)) == Partition{});
  CHECK(omega_partition(IndexSet({1, 2, 3}, 6)) == Partition{3, 3, 3});

  // Box-complementarity and the reflection identity, swept.
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (const IndexSet& I : all_subsets(n, r)) {
        Partition lam = lambda_of_index_set(I), om = omega_partition(I);
        CHECK(fits(lam, BoxBound{r, n - r}));
        CHECK(fits(om, BoxBound{r, n - r}));
        for (int j = 1; j <= r; ++j) CHECK(lam[j - 1] + om[r - j] == n - r);
        CHECK(lambda_of_index_set(reflect(I)) == om);
        CHECK(omega_partition(reflect(I)) == lam);
        // Codimension of omega_I is r(n-r) minus the dimension sum_k (i_k - k).
        int dim = 0;
        for (int k = 0; k < r; ++k) dim += I.elements()[k] - (k + 1);
        CHECK(om.weight() == r * (n - r) - dim);
      }
    }
  }
}

TEST_CASE("order reversal under the maps") {
  // H <= I iff lambda(H) \subseteq lambda(I) iff omega(I) \subseteq omega(H).
  for (const IndexSet& H : all_subsets(5, 2)) {
    for (const IndexSet& I : all_subsets(5, 2)) {
      CHECK(leq(H, I) == lambda_of_index_set(I).contains(lambda_of_index_set(H)));
      CHECK(leq(H, I) == omega_partition(H).contains(omega_partition(I)));
    }
  }
}
