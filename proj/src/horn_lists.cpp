#include "horn_lists.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace horncone {

namespace {

void validate_rnm(int r, int n, int m) {
  if (n < 1 || r < 1 || r > n || m < 1)
    throw std::invalid_argument("list generation: need 1 <= r <= n and m >= 1");
}

// Iterate all m-tuples over `subsets` in lex order (first factor most significant).
template <class F>
void for_each_tuple(const std::vector<IndexSet>& subsets, int m, F&& f) {
  std::vector<std::size_t> idx(m, 0);
  std::vector<IndexSet> cur;
  while (true) {
    cur.clear();
    for (int s = 0; s < m; ++s) cur.push_back(subsets[idx[s]]);
    f(IndexTuple(cur));
    int s = m - 1;
    while (s >= 0 && idx[s] + 1 == subsets.size()) idx[s--] = 0;
    if (s < 0) break;
    ++idx[s];
  }
}

}  // namespace

std::vector<ListEntry> generate_S(int r, int n, int m) {
  validate_rnm(r, n, m);
  std::vector<ListEntry> out;
  BoxBound box{r, n - r};
  Partition point{std::vector<int>(r, n - r)};
  auto subsets = all_subsets(n, r);
  for_each_tuple(subsets, m, [&](const IndexTuple& t) {
    int codim = 0;
    std::vector<Partition> factors;
    factors.reserve(m);
    for (const IndexSet& I : t.sets()) {
      factors.push_back(omega_partition(I));
      codim += factors.back().weight();
    }
    if (codim > r * (n - r)) return;
    SchubertExpansion e = multi_product(factors, box);
    if (e.zero()) return;
    BigInt coeff = codim == r * (n - r) ? e.coefficient(point) : BigInt(1);
    out.push_back(ListEntry{t, coeff});
  });
  return out;
}

std::vector<ListEntry> generate_R(int r, int n, int m) {
  validate_rnm(r, n, m);
  std::vector<ListEntry> out;
  for (ListEntry& e : generate_S(r, n, m)) {
    int codim = 0;
    for (const IndexSet& I : e.tuple.sets()) codim += omega_partition(I).weight();
    if (codim == r * (n - r) && e.coefficient == 1) out.push_back(std::move(e));
  }
  return out;
}

std::vector<ListEntry> generate_S_all(int n, int m) {
  std::vector<ListEntry> out;
  for (int r = 1; r <= n; ++r) {
    auto part = generate_S(r, n, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<ListEntry> generate_R_all(int n, int m) {
  std::vector<ListEntry> out;
  for (int r = 1; r <= n; ++r) {
    auto part = generate_R(r, n, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::vector<HornTriple> generate_triples_impl(int n, int m, bool c1only, bool omega_flavor) {
  validate_rnm(1, n, m);
  std::vector<HornTriple> out;
  for (int r = 1; r <= n; ++r) {
    BoxBound box{r, n - r};
    auto subsets = all_subsets(n, r);
    std::vector<Partition> parts(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
      parts[i] = omega_flavor ? omega_partition(subsets[i]) : lambda_of_index_set(subsets[i]);
    for_each_tuple(subsets, m, [&](const IndexTuple& t) {
      std::vector<Partition> factors;
      factors.reserve(m);
      for (const IndexSet& I : t.sets()) {
        auto pos = std::lower_bound(subsets.begin(), subsets.end(), I) - subsets.begin();
        factors.push_back(parts[pos]);
      }
      SchubertExpansion e = multi_product(factors, box);
      if (e.zero()) return;
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        BigInt c = e.coefficient(parts[k]);
        if (c == 0) continue;
        if (c1only && c != 1) continue;
        out.push_back(HornTriple{t, subsets[k], c});
      }
    });
  }
  return out;
}

}  // namespace

std::vector<HornTriple> generate_horn_triples(int n, int m, bool coefficient_one_only) {
  return generate_triples_impl(n, m, coefficient_one_only, false);
}

std::vector<HornTriple> generate_reverse_triples(int n, int m, bool coefficient_one_only) {
  return generate_triples_impl(n, m, coefficient_one_only, true);
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::vector<ListEntry>> s_cache, r_cache;
std::map<std::tuple<int, int, bool>, std::vector<HornTriple>> horn_cache, rev_cache;

}  // namespace

const std::vector<ListEntry>& cached_S_all(int n, int m) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = s_cache.find({n, m});
  if (it == s_cache.end()) it = s_cache.emplace(std::make_pair(n, m), generate_S_all(n, m)).first;
  return it->second;
}

const std::vector<ListEntry>& cached_R_all(int n, int m) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = r_cache.find({n, m});
  if (it == r_cache.end()) it = r_cache.emplace(std::make_pair(n, m), generate_R_all(n, m)).first;
  return it->second;
}

const std::vector<HornTriple>& cached_horn_triples(int n, int m, bool coefficient_one_only) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(n, m, coefficient_one_only);
  auto it = horn_cache.find(key);
  if (it == horn_cache.end())
    it = horn_cache.emplace(key, generate_horn_triples(n, m, coefficient_one_only)).first;
  return it->second;
}

const std::vector<HornTriple>& cached_reverse_triples(int n, int m, bool coefficient_one_only) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(n, m, coefficient_one_only);
  auto it = rev_cache.find(key);
  if (it == rev_cache.end())
    it = rev_cache.emplace(key, generate_reverse_triples(n, m, coefficient_one_only)).first;
  return it->second;
}

}  // namespace horncone
