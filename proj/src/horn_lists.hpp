#pragma once

#include <vector>

#include "index_set.hpp"
#include "lr.hpp"

namespace horncone {

/* Entry of S_r^n(m) or R_r^n(m): an m-tuple of cardinality-r subsets of [1..n]
   whose omega-class product is nonzero in H*(Gr(r,n)).  For entries of total
   codimension r(n-r) the coefficient is the multiplicity of the point class;
   otherwise the product is a nonzero class of lower codimension and the
   coefficient is recorded as 1. */
struct ListEntry {
  IndexTuple tuple;
  BigInt coefficient;

  friend bool operator==(const ListEntry&, const ListEntry&) = default;
};

// S_r^n(m): product of omega classes nonzero.  Lex order of concatenated sets.
std::vector<ListEntry> generate_S(int r, int n, int m);
// R_r^n(m): product equals the point class with coefficient exactly 1.
std::vector<ListEntry> generate_R(int r, int n, int m);
// Unions over r = 1..n (r = n contributes the single trace tuple ([n],...,[n])).
std::vector<ListEntry> generate_S_all(int n, int m);
std::vector<ListEntry> generate_R_all(int n, int m);

/* Horn triple: sets (I(1),...,I(m)) and K, all cardinality r, with
   sigma_{lambda(K)} occurring in prod_s sigma_{lambda(I(s))} in H*(Gr(r,n)).
   coefficient = that multiplicity. */
struct HornTriple {
  IndexTuple sets;
  IndexSet K;
  BigInt coefficient;

  friend bool operator==(const HornTriple&, const HornTriple&) = default;
};

// All Horn triples for r = 1..n; r = n contributes the trace triple.
// coefficient_one_only keeps only multiplicity-1 triples.
std::vector<HornTriple> generate_horn_triples(int n, int m, bool coefficient_one_only);
// Same with omega-partitions in place of lambda-partitions (reverse problems).
std::vector<HornTriple> generate_reverse_triples(int n, int m, bool coefficient_one_only);

/* Shared read-only caches keyed by (n, m, flavor); generation is pure, the
   cache is a speedup only. */
const std::vector<ListEntry>& cached_S_all(int n, int m);
const std::vector<ListEntry>& cached_R_all(int n, int m);
const std::vector<HornTriple>& cached_horn_triples(int n, int m, bool coefficient_one_only);
const std::vector<HornTriple>& cached_reverse_triples(int n, int m, bool coefficient_one_only);

}  // namespace horncone
