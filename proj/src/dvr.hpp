#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "partition.hpp"

namespace horncone {

/* Finite torsion modules over a discrete valuation ring, modelled concretely
   as Z/p^{a_1} + ... + Z/p^{a_k}.  The statements being checked are
   DVR-independent, so one concrete model suffices for an oracle. */

struct ModuleType {
  long long p = 2;
  Partition type;
};

class FiniteModule {
 public:
  using Element = std::vector<int>;  // x_i modulo p^{type_i}

  FiniteModule(long long p, Partition type);

  long long p() const { return p_; }
  const Partition& type() const { return type_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  long long order() const;

  Element zero() const { return Element(moduli_.size(), 0); }
  bool valid(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(long long k, const Element& x) const;
  // Smallest e >= 0 with p^e * x = 0.
  int order_exponent(const Element& x) const;

  std::vector<Element> all_elements() const;  // lexicographic

 private:
  long long p_;
  Partition type_;
  std::vector<long long> moduli_;  // p^{type_i}
};

/* Generator-image matrix for a map between finite modules: column i holds the
   image of the i-th source generator. */
struct Homomorphism {
  std::vector<FiniteModule::Element> images;  // one per source generator

  // p^{source type_i} * images[i] must vanish in the target.
  bool well_defined(const FiniteModule& source, const FiniteModule& target) const;
  FiniteModule::Element apply(const FiniteModule& source, const FiniteModule& target,
                              const FiniteModule::Element& x) const;
};

// Closure of the generated subgroup, as a sorted element list.
std::vector<FiniteModule::Element> subgroup_closure(const FiniteModule& m,
                                                    const std::vector<FiniteModule::Element>& gens);

/* Type of the subgroup generated by the given elements, recovered from the
   cardinalities |p^k S|: the conjugate type counts log_p|p^k S| - log_p|p^{k+1} S|. */
Partition subgroup_type(const FiniteModule& m, const std::vector<FiniteModule::Element>& gens);

/* Type of M / S for a subgroup S given as a closed, sorted element list;
   recovered from |p^k M + S| / |S|. */
Partition quotient_type(const FiniteModule& m, const std::vector<FiniteModule::Element>& subgroup);

struct DvrBudget {
  long long max_order = 1024;    // largest module order enumerated
  long long max_states = 200000; // subgroup-search states explored
};

/* Exact sequence B -> C -> A of types beta, gamma, alpha: the image of the
   first map must equal the kernel of the second.  Candidate images are
   enumerated as generated subgroups (generator images filtered by the
   well-definedness congruence); a subgroup S is a kernel of some map to A
   exactly when C/S embeds into A. */
bool exists_exact_sequence_bruteforce(const Partition& beta, const Partition& gamma,
                                      const Partition& alpha, long long p,
                                      const DvrBudget& budget = {});

/* Littlewood-Richardson route: partitions alpha~ inside alpha and beta~ inside
   beta with |alpha~| + |beta~| = |gamma| and c_{alpha~ beta~}^gamma > 0. */
bool exists_exact_sequence_lr(const Partition& beta, const Partition& gamma,
                              const Partition& alpha);

/* Inequality route: the majorization system on the padded spectra. */
bool exists_exact_sequence_inequality(const Partition& beta, const Partition& gamma,
                                      const Partition& alpha);

/* Submodule B of type beta inside C of type gamma with C/B of type alpha;
   equivalent to positivity of c_{alpha beta}^gamma. */
bool green_klein_check(const Partition& alpha, const Partition& beta, const Partition& gamma,
                       long long p, const DvrBudget& budget = {});

/* Given c_{alpha beta}^gamma > 0 and gamma~ inside gamma, find alpha~ inside
   alpha and beta~ inside beta with c_{alpha~ beta~}^{gamma~} > 0 (largest
   alpha~ first, so gamma~ = gamma returns (alpha, beta)). */
std::pair<Partition, Partition> factor_pair_search(const Partition& alpha, const Partition& beta,
                                              const Partition& gamma,
                                              const Partition& gamma_tilde);

}  // namespace horncone
