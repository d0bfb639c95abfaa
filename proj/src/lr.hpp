#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace horncone {

/* Littlewood-Richardson coefficient c_{lambda mu}^{nu}: the number of
   semistandard skew tableaux of shape nu/lambda and content mu whose reverse
   reading word is a lattice word.  Exact count. */
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/* Expansion of a product of Schubert classes in H*(Gr(r,n)): partitions are
   confined to the rows x cols box; terms outside the box are truncated away. */
struct SchubertExpansion {
  BoxBound bound;
  std::map<Partition, BigInt> terms;  // nonzero coefficients only

  bool zero() const { return terms.empty(); }
  // Common weight of all terms, or -1 if zero.  (Products are homogeneous.)
  int degree() const { return terms.empty() ? -1 : terms.begin()->first.weight(); }
  BigInt coefficient(const Partition& nu) const;
};

// Product sigma_{f1} ... sigma_{fk} in H*(Gr(rows, rows+cols)).
// Throws std::invalid_argument if a factor does not fit the box.
SchubertExpansion multi_product(const std::vector<Partition>& factors, const BoxBound& bound);

/* Multiplicity of the irreducible V_nu in V_{f1} x ... x V_{fk} for GL(N),
   N >= all lengths: the untruncated iterated LR coefficient. */
BigInt tensor_multiplicity(const std::vector<Partition>& factors, const Partition& nu);

/* First-row stripping: requires lambda_1 + mu_1 = nu_1; removes the first row
   of each partition.  c is invariant under this map. */
std::tuple<Partition, Partition, Partition> strip_first_rows(const Partition& lambda,
                                                             const Partition& mu,
                                                             const Partition& nu);

}  // namespace horncone
