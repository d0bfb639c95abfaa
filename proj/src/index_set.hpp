#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace horncone {

/* Strictly increasing subset of [1..ambient], cardinality r. */
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<int> elements, int ambient);

  const std::vector<int>& elements() const { return elements_; }
  int ambient() const { return ambient_; }
  int cardinality() const { return static_cast<int>(elements_.size()); }
  bool contains(int i) const;
  IndexSet complement() const;

  std::string to_string() const;  // "{2,4}"
  static IndexSet from_string(std::string_view s, int ambient);

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  std::vector<int> elements_;
  int ambient_ = 0;
};

// I_P = {i_p : p in P}; P is a subset of [1..r], r = |I|.
IndexSet restrict_to(const IndexSet& I, const IndexSet& P);
// I_P^+ = I union (I^c)_P; P a subset of [1..n-r].
IndexSet extend_by(const IndexSet& I, const IndexSet& P);
// Componentwise h_k <= i_k (both cardinality r).
bool leq(const IndexSet& H, const IndexSet& I);
// Equivalent formulation via prefix counts |H cap [t]| >= |I cap [t]|.
bool leq_by_prefix_counts(const IndexSet& H, const IndexSet& I);

// All cardinality-r subsets of [1..n] in lexicographic order.
std::vector<IndexSet> all_subsets(int n, int r);

// lambda(I) = (i_r - r, ..., i_2 - 2, i_1 - 1).
Partition lambda_of_index_set(const IndexSet& I);
// omega-partition: lambda_k = n - r + k - i_k; fits the r x (n-r) box.
Partition omega_partition(const IndexSet& I);
// i -> n + 1 - i (reverses order); lambda(reflect I) = omega(I).
IndexSet reflect(const IndexSet& I);

/* m-tuple of index sets with common cardinality and ambient. */
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<IndexSet> sets);

  const std::vector<IndexSet>& sets() const { return sets_; }
  const IndexSet& operator[](std::size_t s) const { return sets_[s]; }
  int factors() const { return static_cast<int>(sets_.size()); }
  int cardinality() const { return sets_.empty() ? 0 : sets_[0].cardinality(); }
  int ambient() const { return sets_.empty() ? 0 : sets_[0].ambient(); }

  std::string to_string() const;  // "({2,4},{2,4})"

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend std::strong_ordering operator<=>(const IndexTuple& a, const IndexTuple& b);

 private:
  std::vector<IndexSet> sets_;
};

}  // namespace horncone
