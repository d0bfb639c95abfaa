#include "feasibility.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lr.hpp"

namespace horncone {

namespace {

void require_system(const std::vector<Spectrum>& alphas, int n) {
  if (alphas.empty()) throw std::invalid_argument("need at least one spectrum");
  for (const Spectrum& a : alphas)
    if (a.size() != n) throw std::invalid_argument("spectra lengths differ");
  if (n < 1) throw std::invalid_argument("need n >= 1");
}

void record(FeasibilityReport& rep, InequalityRecord rec, int r) {
  if (rec.equality ? rec.slack != 0 : rec.slack < 0) {
    rep.feasible = false;
    rep.violated.push_back(std::move(rec));
  } else if (rec.slack == 0) {
    if (!rep.max_tight_r || *rep.max_tight_r < r) rep.max_tight_r = r;
    rep.tight.push_back(std::move(rec));
  }
}

}  // namespace

Rat set_sum(const Spectrum& x, const IndexSet& I) {
  Rat t = 0;
  for (int i : I.elements()) t += x[i - 1];
  return t;
}

Rat tuple_sum(const std::vector<Spectrum>& alphas, const IndexTuple& t) {
  Rat out = 0;
  for (int s = 0; s < t.factors(); ++s) out += set_sum(alphas[s], t[s]);
  return out;
}

FeasibilityReport check_negative_sum(const std::vector<Spectrum>& alphas, bool use_R_only) {
  int n = alphas.at(0).size();
  require_system(alphas, n);
  int m = static_cast<int>(alphas.size());
  const auto& list = use_R_only ? cached_R_all(n, m) : cached_S_all(n, m);
  FeasibilityReport rep;
  for (const ListEntry& e : list) {
    InequalityRecord rec{e.tuple, std::nullopt, -tuple_sum(alphas, e.tuple), false};
    record(rep, std::move(rec), e.tuple.cardinality());
  }
  return rep;
}

namespace {

FeasibilityReport check_triples(const std::vector<Spectrum>& alphas, const Spectrum& gamma,
                                bool c1, bool reverse, bool trace_equality) {
  int n = gamma.size();
  require_system(alphas, n);
  int m = static_cast<int>(alphas.size());
  const auto& triples =
      reverse ? cached_reverse_triples(n, m, c1) : cached_horn_triples(n, m, c1);
  FeasibilityReport rep;
  for (const HornTriple& t : triples) {
    Rat lhs = tuple_sum(alphas, t.sets), rhs = set_sum(gamma, t.K);
    InequalityRecord rec;
    rec.sets = t.sets;
    rec.K = t.K;
    rec.slack = reverse ? rhs - lhs : lhs - rhs;
    rec.equality = trace_equality && t.K.cardinality() == n;
    record(rep, std::move(rec), t.K.cardinality());
  }
  return rep;
}

}  // namespace

FeasibilityReport check_majorized(const std::vector<Spectrum>& alphas, const Spectrum& gamma,
                                  bool coefficient_one_only) {
  return check_triples(alphas, gamma, coefficient_one_only, false, false);
}

FeasibilityReport check_klyachko_equality(const std::vector<Spectrum>& alphas,
                                          const Spectrum& gamma, bool coefficient_one_only) {
  return check_triples(alphas, gamma, coefficient_one_only, false, true);
}

FeasibilityReport check_reverse_majorized(const std::vector<Spectrum>& alphas,
                                          const Spectrum& gamma, bool coefficient_one_only) {
  return check_triples(alphas, gamma, coefficient_one_only, true, false);
}

Rat max_tuple_sum(const std::vector<Spectrum>& alphas, bool use_R_only) {
  int n = alphas.at(0).size();
  require_system(alphas, n);
  int m = static_cast<int>(alphas.size());
  const auto& list = use_R_only ? cached_R_all(n, m) : cached_S_all(n, m);
  bool first = true;
  Rat best = 0;
  for (const ListEntry& e : list) {
    Rat v = tuple_sum(alphas, e.tuple);
    if (first || v > best) best = v, first = false;
  }
  return best;
}

namespace {

std::mutex compiled_mutex;
std::map<std::tuple<int, int, bool>, std::vector<CompiledTriple>> compiled_cache;

}  // namespace

const std::vector<CompiledTriple>& compiled_majorized_triples(int n, int m,
                                                              bool coefficient_one_only) {
  std::lock_guard<std::mutex> lock(compiled_mutex);
  auto key = std::make_tuple(n, m, coefficient_one_only);
  auto it = compiled_cache.find(key);
  if (it == compiled_cache.end()) {
    std::vector<CompiledTriple> out;
    for (const HornTriple& t : cached_horn_triples(n, m, coefficient_one_only)) {
      CompiledTriple c;
      for (int s = 0; s < m; ++s)
        for (int i : t.sets[s].elements()) c.alpha_terms.emplace_back(s, i - 1);
      for (int k : t.K.elements()) c.gamma_terms.push_back(k - 1);
      out.push_back(std::move(c));
    }
    it = compiled_cache.emplace(key, std::move(out)).first;
  }
  return it->second;
}

FloatCheckResult check_majorized_float(const std::vector<std::vector<double>>& alphas,
                                       const std::vector<double>& gamma,
                                       bool coefficient_one_only, double tol) {
  int n = static_cast<int>(gamma.size());
  int m = static_cast<int>(alphas.size());
  FloatCheckResult res;
  for (const CompiledTriple& t : compiled_majorized_triples(n, m, coefficient_one_only)) {
    double lhs = 0;
    for (auto [s, i] : t.alpha_terms) lhs += alphas[s][i];
    for (int k : t.gamma_terms) lhs -= gamma[k];
    if (lhs < -tol) {
      res.feasible = false;
      ++res.violations;
      res.min_slack = std::min(res.min_slack, lhs);
    }
  }
  return res;
}

std::pair<std::vector<Spectrum>, std::vector<Spectrum>> split(
    const std::vector<Spectrum>& alphas, const IndexTuple& tight) {
  int n = alphas.at(0).size();
  require_system(alphas, n);
  if (tight.factors() != static_cast<int>(alphas.size()) || tight.ambient() != n)
    throw std::invalid_argument("split: tuple shape mismatch");
  if (tuple_sum(alphas, tight) != 0) throw std::invalid_argument("split: tuple sum not zero");
  std::vector<Spectrum> first, second;
  for (std::size_t s = 0; s < alphas.size(); ++s) {
    std::vector<Rat> a, b;
    for (int i : tight[s].elements()) a.push_back(alphas[s][i - 1]);
    IndexSet comp = tight[s].complement();
    for (int i : comp.elements()) b.push_back(alphas[s][i - 1]);
    first.emplace_back(std::move(a));
    second.emplace_back(std::move(b));
  }
  return {std::move(first), std::move(second)};
}

std::pair<Rat, std::vector<Spectrum>> epsilon_shift(const std::vector<Spectrum>& alphas) {
  int n = alphas.at(0).size();
  require_system(alphas, n);
  int m = static_cast<int>(alphas.size());
  bool first = true;
  Rat eps = 0;
  for (const ListEntry& e : cached_S_all(n, m)) {
    Rat sum = tuple_sum(alphas, e.tuple);
    if (sum > 0) throw std::invalid_argument("epsilon_shift: system infeasible");
    Rat cand = -sum / (m * e.tuple.cardinality());
    if (first || cand < eps) eps = cand, first = false;
  }
  std::vector<Spectrum> shifted;
  for (const Spectrum& a : alphas) {
    std::vector<Rat> v = a.values();
    for (Rat& x : v) x += eps;
    shifted.emplace_back(std::move(v));
  }
  return {eps, std::move(shifted)};
}

std::vector<Spectrum> lift_to_equality(std::vector<Spectrum> alphas, int s0) {
  int n = alphas.at(0).size();
  require_system(alphas, n);
  if (s0 < 0 || s0 >= static_cast<int>(alphas.size()))
    throw std::invalid_argument("lift_to_equality: s0 out of range");
  for (const Spectrum& a : alphas)
    if (!a.integral()) throw std::invalid_argument("lift_to_equality: spectra must be integral");
  {
    FeasibilityReport rep = check_negative_sum(alphas);
    if (!rep.feasible)
      throw std::invalid_argument("lift_to_equality: input violates the system");
  }
  int m = static_cast<int>(alphas.size());
  const auto& list = cached_S_all(n, m);

  auto bump_at_value = [&](int i /* 1-based position */) {
    // Increment the first entry equal to alpha_i(s0): same multiset, still sorted.
    std::vector<Rat> v = alphas[s0].values();
    Rat val = v[i - 1];
    for (int j = 0; j < n; ++j) {
      if (v[j] == val) {
        v[j] += 1;
        break;
      }
    }
    alphas[s0] = Spectrum(std::move(v));
  };

  while (true) {
    Rat total = 0;
    for (const Spectrum& a : alphas) total += a.total();
    if (total == 0) break;

    int best_r = 0;
    const IndexTuple* best = nullptr;
    for (const ListEntry& e : list) {
      if (tuple_sum(alphas, e.tuple) != 0) continue;
      int r = e.tuple.cardinality();
      if (r > best_r) best_r = r, best = &e.tuple;  // list is lex-sorted within r
    }
    if (!best) {
      bump_at_value(1);
      continue;
    }
    const IndexSet& I0 = (*best)[s0];
    int i = 1;
    while (I0.contains(i)) ++i;  // smallest index of [n] missing from I(s0)
    bump_at_value(i);
  }
  return alphas;
}

Spectrum lift_gamma(const std::vector<Spectrum>& alphas, const Spectrum& gamma) {
  int n = gamma.size();
  require_system(alphas, n);
  std::vector<Spectrum> system;
  for (const Spectrum& a : alphas) system.push_back(negate_reverse(a));
  system.push_back(gamma);
  int s0 = static_cast<int>(system.size()) - 1;
  std::vector<Spectrum> lifted = lift_to_equality(std::move(system), s0);
  return lifted[s0];
}

namespace {

// Subpartitions of bound with exactly `len` stored parts, lex order.
std::vector<std::vector<int>> bounded_rows(const Spectrum& bound, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int prev) -> void {
    if (row == len) {
      out.push_back(cur);
      return;
    }
    int hi = std::min<int>(prev, static_cast<int>(numerator(bound[row])));
    for (int v = 0; v <= hi; ++v) {
      cur.push_back(v);
      self(self, row + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, bound.values().empty() ? 0 : static_cast<int>(numerator(bound[0])));
  return out;
}

}  // namespace

std::vector<Spectrum> shrink_alphas(const std::vector<Spectrum>& alphas, const Spectrum& gamma) {
  int n = gamma.size();
  require_system(alphas, n);
  for (const Spectrum& a : alphas)
    if (!a.is_partition()) throw std::invalid_argument("shrink_alphas: alphas must be partitions");
  if (!gamma.is_partition()) throw std::invalid_argument("shrink_alphas: gamma not a partition");
  {
    FeasibilityReport rep = check_majorized(alphas, gamma);
    if (!rep.feasible) throw std::invalid_argument("shrink_alphas: system infeasible");
  }
  int m = static_cast<int>(alphas.size());
  int target = static_cast<int>(numerator(gamma.total()));
  Partition gam = gamma.to_partition();

  std::vector<std::vector<std::vector<int>>> choices(m);
  for (int s = 0; s < m; ++s) choices[s] = bounded_rows(alphas[s], n);

  std::vector<const std::vector<int>*> picked(m);
  std::vector<Spectrum> result;
  auto weight_of = [](const std::vector<int>& v) {
    int w = 0;
    for (int x : v) w += x;
    return w;
  };
  std::vector<int> max_rest(m + 1, 0);
  for (int s = m - 1; s >= 0; --s) {
    int mx = 0;
    for (const auto& c : choices[s]) mx = std::max(mx, weight_of(c));
    max_rest[s] = max_rest[s + 1] + mx;
  }

  auto dfs = [&](auto&& self, int s, int used) -> bool {
    if (s == m) {
      if (used != target) return false;
      std::vector<Partition> parts;
      for (int t = 0; t < m; ++t) parts.emplace_back(*picked[t]);
      if (tensor_multiplicity(parts, gam) == 0) return false;
      for (int t = 0; t < m; ++t) result.emplace_back(Spectrum(parts[t]));
      return true;
    }
    for (const auto& c : choices[s]) {
      int w = weight_of(c);
      if (used + w > target) continue;
      if (used + w + max_rest[s + 1] < target) continue;
      picked[s] = &c;
      if (self(self, s + 1, used + w)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 0, 0))
    throw std::runtime_error("shrink_alphas: no witness found for a feasible instance");
  // Pad back to length n so callers keep a uniform shape.
  for (Spectrum& sp : result) {
    std::vector<Rat> v = sp.values();
    v.resize(n, Rat(0));
    sp = Spectrum(std::move(v));
  }
  return result;
}

}  // namespace horncone
