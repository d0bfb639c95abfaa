#include "dvr.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "feasibility.hpp"
#include "lr.hpp"

namespace horncone {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int log_cardinality(long long p, std::size_t card) {
  int e = 0;
  long long v = 1;
  while (v < static_cast<long long>(card)) {
    v *= p;
    ++e;
  }
  return e;
}

// Type with parts {d_k} as conjugate counts: d_k = log_p|p^k S| - log_p|p^{k+1} S|.
Partition type_from_layer_logs(const std::vector<int>& logs) {
  std::vector<int> conj;
  for (std::size_t k = 0; k + 1 < logs.size(); ++k) conj.push_back(logs[k] - logs[k + 1]);
  std::vector<int> parts;
  for (std::size_t i = 0; i < conj.size(); ++i)
    for (int c = 0; c < conj[i]; ++c) {
      if (parts.size() <= static_cast<std::size_t>(c)) parts.push_back(0);
      ++parts[c];
    }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(parts);
}

using ElementSet = std::set<FiniteModule::Element>;

std::vector<FiniteModule::Element> image_under_power(const FiniteModule& m,
                                                     const std::vector<FiniteModule::Element>& set,
                                                     int k) {
  long long mult = pow_ll(m.p(), k);
  ElementSet out;
  for (const auto& x : set) out.insert(m.scale(mult, x));
  return {out.begin(), out.end()};
}

}  // namespace

FiniteModule::FiniteModule(long long p, Partition type) : p_(p), type_(std::move(type)) {
  if (!is_prime(p_)) throw std::invalid_argument("module prime expected");
  for (int i = 0; i < type_.length(); ++i) moduli_.push_back(pow_ll(p_, type_[i]));
}

long long FiniteModule::order() const {
  long long r = 1;
  for (long long q : moduli_) r *= q;
  return r;
}

bool FiniteModule::valid(const Element& x) const {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  return true;
}

FiniteModule::Element FiniteModule::add(const Element& x, const Element& y) const {
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    r[i] = static_cast<int>((x[i] + static_cast<long long>(y[i])) % moduli_[i]);
  return r;
}

FiniteModule::Element FiniteModule::scale(long long k, const Element& x) const {
  Element r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    long long v = (k % moduli_[i]) * x[i] % moduli_[i];
    if (v < 0) v += moduli_[i];
    r[i] = static_cast<int>(v);
  }
  return r;
}

int FiniteModule::order_exponent(const Element& x) const {
  int e = 0;
  Element cur = x;
  while (cur != zero()) {
    cur = scale(p_, cur);
    ++e;
  }
  return e;
}

std::vector<FiniteModule::Element> FiniteModule::all_elements() const {
  std::vector<Element> out = {zero()};
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::vector<Element> next;
    next.reserve(out.size() * moduli_[i]);
    for (const auto& x : out)
      for (long long v = 0; v < moduli_[i]; ++v) {
        Element y = x;
        y[i] = static_cast<int>(v);
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Homomorphism::well_defined(const FiniteModule& source, const FiniteModule& target) const {
  if (static_cast<int>(images.size()) != source.rank()) return false;
  for (int i = 0; i < source.rank(); ++i) {
    if (!target.valid(images[i])) return false;
    if (target.order_exponent(images[i]) > source.type()[i]) return false;
  }
  return true;
}

FiniteModule::Element Homomorphism::apply(const FiniteModule& source, const FiniteModule& target,
                                          const FiniteModule::Element& x) const {
  if (!source.valid(x)) throw std::invalid_argument("element outside the source module");
  FiniteModule::Element r = target.zero();
  for (int i = 0; i < source.rank(); ++i) r = target.add(r, target.scale(x[i], images[i]));
  return r;
}

std::vector<FiniteModule::Element> subgroup_closure(
    const FiniteModule& m, const std::vector<FiniteModule::Element>& gens) {
  ElementSet closed;
  closed.insert(m.zero());
  std::vector<FiniteModule::Element> frontier = {m.zero()};
  while (!frontier.empty()) {
    std::vector<FiniteModule::Element> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        if (!m.valid(g)) throw std::invalid_argument("generator outside the module");
        auto y = m.add(x, g);
        if (closed.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

Partition subgroup_type(const FiniteModule& m, const std::vector<FiniteModule::Element>& gens) {
  auto set = subgroup_closure(m, gens);
  std::vector<int> logs;
  for (;;) {
    logs.push_back(log_cardinality(m.p(), set.size()));
    if (set.size() == 1) break;
    set = image_under_power(m, set, 1);
  }
  return type_from_layer_logs(logs);
}

Partition quotient_type(const FiniteModule& m, const std::vector<FiniteModule::Element>& subgroup) {
  int sub_log = log_cardinality(m.p(), subgroup.size());
  auto full = m.all_elements();
  std::vector<int> logs;
  for (int k = 0;; ++k) {
    auto layer = image_under_power(m, full, k);
    ElementSet sum;
    for (const auto& x : layer)
      for (const auto& s : subgroup) sum.insert(m.add(x, s));
    logs.push_back(log_cardinality(m.p(), sum.size()) - sub_log);
    if (logs.back() == 0) break;
  }
  return type_from_layer_logs(logs);
}

namespace {

/* DFS over generated subgroups of C: stage i picks the image of the i-th
   generator among elements killed by p^{orders[i]}, keeping (subgroup, stage)
   states deduplicated.  Every visited subgroup is reported (later generators
   may always map to zero). */
template <typename Visit>
void visit_generated_subgroups(const FiniteModule& c, const std::vector<int>& orders,
                               const DvrBudget& budget, Visit&& visit) {
  if (c.order() > budget.max_order)
    throw BudgetExceeded("module order exceeds the enumeration budget");
  auto elements = c.all_elements();
  std::set<std::pair<std::vector<FiniteModule::Element>, int>> seen;
  long long states = 0;
  auto rec = [&](auto&& self, const std::vector<FiniteModule::Element>& sub, int stage) -> bool {
    if (!seen.insert({sub, stage}).second) return false;
    if (++states > budget.max_states)
      throw BudgetExceeded("subgroup search exceeds the state budget");
    if (visit(sub)) return true;
    if (stage == static_cast<int>(orders.size())) return false;
    long long killer = pow_ll(c.p(), orders[stage]);
    for (const auto& x : elements) {
      if (c.scale(killer, x) != c.zero()) continue;
      ElementSet grown(sub.begin(), sub.end());
      std::vector<FiniteModule::Element> frontier = {x};
      while (!frontier.empty()) {
        std::vector<FiniteModule::Element> next;
        for (const auto& f : frontier) {
          if (!grown.insert(f).second) continue;
          for (const auto& s : sub) next.push_back(c.add(f, s));
          next.push_back(c.add(f, x));
        }
        frontier = std::move(next);
      }
      if (self(self, std::vector<FiniteModule::Element>(grown.begin(), grown.end()), stage + 1))
        return true;
    }
    return false;
  };
  rec(rec, {c.zero()}, 0);
}

}  // namespace

bool exists_exact_sequence_bruteforce(const Partition& beta, const Partition& gamma,
                                      const Partition& alpha, long long p,
                                      const DvrBudget& budget) {
  FiniteModule c(p, gamma);
  std::vector<int> orders;
  for (int i = 0; i < beta.length(); ++i) orders.push_back(beta[i]);
  bool found = false;
  /* A subgroup S arises as the image of a well-defined map from B exactly when
     it is generated by elements of orders dividing p^{beta_i}; it arises as the
     kernel of a map to A exactly when C/S embeds into A, i.e. the quotient
     type fits inside alpha componentwise. */
  visit_generated_subgroups(c, orders, budget, [&](const auto& sub) {
    if (alpha.contains(quotient_type(c, sub))) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

bool exists_exact_sequence_lr(const Partition& beta, const Partition& gamma,
                              const Partition& alpha) {
  int target = gamma.weight();
  for (const auto& at : subpartitions(alpha)) {
    int rest = target - at.weight();
    if (rest < 0 || rest > beta.weight()) continue;
    for (const auto& bt : subpartitions(beta)) {
      if (bt.weight() != rest) continue;
      if (lr_coefficient(at, bt, gamma) > 0) return true;
    }
  }
  return false;
}

bool exists_exact_sequence_inequality(const Partition& beta, const Partition& gamma,
                                      const Partition& alpha) {
  int n = std::max({1, alpha.length(), beta.length(), gamma.length()});
  auto pad = [n](const Partition& q) {
    std::vector<Rat> vals;
    for (int i = 0; i < n; ++i) vals.emplace_back(q[i]);
    return Spectrum(std::move(vals));
  };
  return check_majorized({pad(alpha), pad(beta)}, pad(gamma)).feasible;
}

bool green_klein_check(const Partition& alpha, const Partition& beta, const Partition& gamma,
                       long long p, const DvrBudget& budget) {
  FiniteModule c(p, gamma);
  std::vector<int> orders;
  for (int i = 0; i < gamma.length(); ++i) orders.push_back(gamma[i]);
  bool found = false;
  visit_generated_subgroups(c, orders, budget, [&](const auto& sub) {
    std::vector<FiniteModule::Element> gens(sub.begin(), sub.end());
    if (subgroup_type(c, gens) == beta && quotient_type(c, sub) == alpha) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

std::pair<Partition, Partition> factor_pair_search(const Partition& alpha, const Partition& beta,
                                              const Partition& gamma,
                                              const Partition& gamma_tilde) {
  if (lr_coefficient(alpha, beta, gamma) == 0)
    throw std::invalid_argument("factor_pair_search: coefficient of the full triple vanishes");
  if (!gamma.contains(gamma_tilde))
    throw std::invalid_argument("factor_pair_search: gamma~ does not fit inside gamma");
  auto alpha_subs = subpartitions(alpha);
  auto beta_subs = subpartitions(beta);
  auto descending = [](std::vector<Partition>& v) {
    std::sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) { return b < a; });
  };
  descending(alpha_subs);
  descending(beta_subs);
  int target = gamma_tilde.weight();
  for (const auto& at : alpha_subs) {
    int rest = target - at.weight();
    if (rest < 0 || rest > beta.weight()) continue;
    for (const auto& bt : beta_subs) {
      if (bt.weight() != rest) continue;
      if (lr_coefficient(at, bt, gamma_tilde) > 0) return {at, bt};
    }
  }
  throw std::runtime_error("factor_pair_search: no pair found (existence is guaranteed)");
}

}  // namespace horncone
