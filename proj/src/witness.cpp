#include "witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace horncone {

const char* witness_status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::success: return "success";
    case WitnessStatus::infeasible: return "infeasible";
    case WitnessStatus::unresolved: return "unresolved";
  }
  return "unresolved";
}

namespace {

std::string spectra_key(const std::vector<Spectrum>& alphas) {
  std::string key = spectra_to_string(alphas);
  return key;
}

struct CacheEntry {
  WitnessStatus status = WitnessStatus::unresolved;
  std::vector<Matrix> matrices;
  double spectral_residual = 0;
  double slack_min_eigenvalue = 0;
  nlohmann::json split_tree;
};

thread_local std::map<std::string, CacheEntry> base_cache;
constexpr std::size_t kCacheCap = 200000;

/* Exact diagonal witness: permutations pi_s with
   sum_s alpha_{pi_s(i)}(s) = 0 for every coordinate i.  The first factor can
   be fixed identity (conjugating all factors by a common permutation matrix
   preserves the property). */
bool diagonal_search(const std::vector<Spectrum>& alphas, long long budget,
                     std::vector<std::vector<Rat>>& out) {
  int m = static_cast<int>(alphas.size());
  int n = alphas[0].size();
  std::vector<std::vector<std::vector<Rat>>> perms(m);
  for (int s = 1; s < m; ++s) {
    std::vector<Rat> v = alphas[s].values();
    std::sort(v.begin(), v.end());
    do {
      perms[s].push_back(v);
    } while (std::next_permutation(v.begin(), v.end()) &&
             static_cast<long long>(perms[s].size()) <= budget);
    if (static_cast<long long>(perms[s].size()) > budget) return false;
  }
  long long combos = 1;
  for (int s = 1; s < m; ++s) {
    combos *= static_cast<long long>(perms[s].size());
    if (combos > budget) return false;
  }

  // Coordinate-wise reachability bounds over the remaining factors.
  std::vector<Rat> min_rest(m + 1, Rat(0)), max_rest(m + 1, Rat(0));
  for (int s = m - 1; s >= 1; --s) {
    min_rest[s] = min_rest[s + 1] + alphas[s][n - 1];
    max_rest[s] = max_rest[s + 1] + alphas[s][0];
  }

  std::vector<Rat> cur = alphas[0].values();
  std::vector<const std::vector<Rat>*> picked(m, nullptr);
  auto dfs = [&](auto&& self, int s) -> bool {
    if (s == m) {
      for (int i = 0; i < n; ++i)
        if (cur[i] != 0) return false;
      return true;
    }
    for (int i = 0; i < n; ++i) {
      if (cur[i] + min_rest[s] > 0) return false;
      if (cur[i] + max_rest[s] < 0) return false;
    }
    for (const auto& p : perms[s]) {
      for (int i = 0; i < n; ++i) cur[i] += p[i];
      picked[s] = &p;
      if (self(self, s + 1)) return true;
      for (int i = 0; i < n; ++i) cur[i] -= p[i];
    }
    return false;
  };
  if (!dfs(dfs, 1)) return false;
  out.resize(m);
  out[0] = alphas[0].values();
  for (int s = 1; s < m; ++s) out[s] = *picked[s];
  return true;
}

Matrix diag_matrix(const std::vector<Rat>& v) {
  Matrix out = Matrix::Zero(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i, i) = rat_to_double(v[i]);
  return out;
}

double spectra_deviation(const std::vector<Matrix>& mats,
                         const std::vector<Spectrum>& targets) {
  double worst = 0;
  for (std::size_t s = 0; s < mats.size(); ++s) {
    auto [vals, u] = eig_hermitian(mats[s]);
    std::vector<double> want = targets[s].to_doubles();
    for (std::size_t i = 0; i < vals.size(); ++i)
      worst = std::max(worst, std::abs(vals[i] - want[i]));
  }
  return worst;
}

CacheEntry solve_sum_zero(const std::vector<Spectrum>& alphas, const WitnessOptions& opts) {
  int m = static_cast<int>(alphas.size());
  int n = alphas[0].size();
  CacheEntry out;
  out.split_tree = {{"kind", "sum_zero"}, {"n", n}};

  Rat total = 0;
  for (const Spectrum& a : alphas) total += a.total();
  if (total != 0 || !check_negative_sum(alphas).feasible) {
    out.status = WitnessStatus::infeasible;
    out.split_tree["method"] = "none";
    return out;
  }

  if (opts.diagonal_budget > 0) {
    std::vector<std::vector<Rat>> diag;
    if (diagonal_search(alphas, opts.diagonal_budget, diag)) {
      out.status = WitnessStatus::success;
      for (const auto& v : diag) out.matrices.push_back(diag_matrix(v));
      out.spectral_residual = 0;
      Matrix sum = Matrix::Zero(n, n);
      for (const Matrix& a : out.matrices) sum += a;
      out.slack_min_eigenvalue = -spectral_norm(sum);
      out.split_tree["method"] = "diagonal";
      return out;
    }
  }

  // Alternating projections between the isospectral orbits and the sum-zero
  // subspace; re-spectralization is applied last so achieved spectra are exact.
  std::vector<std::vector<double>> targets;
  for (const Spectrum& a : alphas) targets.push_back(a.to_doubles());
  std::uint64_t base_seed = mix_seed(opts.seed, hash_bytes(spectra_key(alphas).data(),
                                                           spectra_key(alphas).size()));
  double best_norm = -1;
  std::vector<Matrix> best;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    Rng rng(mix_seed(base_seed, 0x5eedull * (restart + 1)));
    std::vector<Matrix> mats;
    for (int s = 0; s < m; ++s)
      mats.push_back(sample_with_spectrum(targets[s], rng, opts.real_symmetric));
    double inner_tol = opts.tol * 0.5;
    for (int it = 0; it < opts.max_iterations; ++it) {
      Matrix sum = Matrix::Zero(n, n);
      for (const Matrix& a : mats) sum += a;
      if (spectral_norm(sum) <= inner_tol) break;
      Matrix shift = sum / m;
      for (int s = 0; s < m; ++s) mats[s] = respectralize(mats[s] - shift, targets[s]);
    }
    Matrix sum = Matrix::Zero(n, n);
    for (const Matrix& a : mats) sum += a;
    double norm = spectral_norm(sum);
    if (best_norm < 0 || norm < best_norm) {
      best_norm = norm;
      best = mats;
    }
    if (norm <= opts.tol) break;
  }
  out.matrices = std::move(best);
  out.spectral_residual = spectra_deviation(out.matrices, alphas);
  out.slack_min_eigenvalue = -best_norm;
  out.split_tree["method"] = "projection";
  out.split_tree["sum_norm"] = best_norm;
  out.status = best_norm <= opts.tol ? WitnessStatus::success : WitnessStatus::unresolved;
  return out;
}

CacheEntry solve_sum_zero_cached(const std::vector<Spectrum>& alphas,
                                 const WitnessOptions& opts) {
  std::string key = spectra_key(alphas);
  key += opts.real_symmetric ? "|r" : "|c";
  key += "|" + std::to_string(opts.seed) + "|" + std::to_string(opts.tol);
  auto it = base_cache.find(key);
  if (it != base_cache.end()) return it->second;
  CacheEntry entry = solve_sum_zero(alphas, opts);
  if (base_cache.size() >= kCacheCap) base_cache.clear();
  base_cache.emplace(std::move(key), entry);
  return entry;
}

CacheEntry solve_negative_sum(const std::vector<Spectrum>& alphas, const WitnessOptions& opts) {
  int m = static_cast<int>(alphas.size());
  int n = alphas[0].size();
  FeasibilityReport rep = check_negative_sum(alphas);
  if (!rep.feasible) {
    CacheEntry out;
    out.status = WitnessStatus::infeasible;
    out.split_tree = {{"kind", "infeasible"}, {"n", n}};
    return out;
  }

  if (rep.max_tight_r) {
    /* Prefer a proper tight split (r < n): it decomposes the problem into two
       independent blocks, each strictly smaller.  Only a system whose sole
       tight inequality is the trace is an irreducible sum-zero base case.
       Among proper splits take the largest r, then the lex-smallest tuple,
       for determinism. */
    const IndexTuple* tight = nullptr;
    for (const InequalityRecord& rec : rep.tight) {
      if (rec.sets.cardinality() == n) continue;
      if (!tight || rec.sets.cardinality() > tight->cardinality() ||
          (rec.sets.cardinality() == tight->cardinality() && rec.sets < *tight))
        tight = &rec.sets;
    }
    if (!tight) return solve_sum_zero_cached(alphas, opts);
    int r = tight->cardinality();

    auto [first, second] = split(alphas, *tight);
    CacheEntry left = solve_sum_zero_cached(first, opts);
    CacheEntry right = solve_negative_sum(second, opts);
    CacheEntry out;
    out.split_tree = {{"kind", "split"},
                      {"r", r},
                      {"tight", tight->to_string()},
                      {"left", left.split_tree},
                      {"right", right.split_tree}};
    out.status = left.status == WitnessStatus::success ? right.status : left.status;
    if (out.status != WitnessStatus::success) return out;
    for (int s = 0; s < m; ++s) {
      Matrix a = Matrix::Zero(n, n);
      a.topLeftCorner(r, r) = left.matrices[s];
      a.bottomRightCorner(n - r, n - r) = right.matrices[s];
      out.matrices.push_back(std::move(a));
    }
    out.spectral_residual = std::max(left.spectral_residual, right.spectral_residual);
    Matrix sum = Matrix::Zero(n, n);
    for (const Matrix& a : out.matrices) sum += a;
    auto [vals, u] = eig_hermitian(sum);
    out.slack_min_eigenvalue = -vals.front();  // min eig of -sum
    return out;
  }

  // All inequalities strict: shift into a tight system, then subtract epsilon.
  auto [eps, shifted] = epsilon_shift(alphas);
  CacheEntry sub = solve_negative_sum(shifted, opts);
  CacheEntry out;
  out.split_tree = {{"kind", "epsilon_shift"},
                    {"epsilon", rat_to_string(eps)},
                    {"child", sub.split_tree}};
  out.status = sub.status;
  if (out.status != WitnessStatus::success) return out;
  double e = rat_to_double(eps);
  for (Matrix a : sub.matrices) {
    a -= e * Matrix::Identity(n, n);
    out.matrices.push_back(std::move(a));
  }
  out.spectral_residual = sub.spectral_residual;
  Matrix sum = Matrix::Zero(n, n);
  for (const Matrix& a : out.matrices) sum += a;
  auto [vals, u] = eig_hermitian(sum);
  out.slack_min_eigenvalue = -vals.front();
  return out;
}

WitnessResult from_entry(CacheEntry entry) {
  WitnessResult res;
  res.status = entry.status;
  res.matrices = std::move(entry.matrices);
  res.spectral_residual = entry.spectral_residual;
  res.slack_min_eigenvalue = entry.slack_min_eigenvalue;
  res.split_tree = std::move(entry.split_tree);
  return res;
}

}  // namespace

WitnessResult realize_sum_zero(const std::vector<Spectrum>& alphas, const WitnessOptions& opts) {
  return from_entry(solve_sum_zero_cached(alphas, opts));
}

WitnessResult realize_negative_sum(const std::vector<Spectrum>& alphas,
                                   const WitnessOptions& opts) {
  return from_entry(solve_negative_sum(alphas, opts));
}

WitnessResult realize_majorized(const std::vector<Spectrum>& alphas, const Spectrum& gamma,
                                const WitnessOptions& opts) {
  std::vector<Spectrum> system;
  for (const Spectrum& a : alphas) system.push_back(negate_reverse(a));
  system.push_back(gamma);
  CacheEntry sub = solve_negative_sum(system, opts);
  WitnessResult res;
  res.status = sub.status;
  res.split_tree = {{"kind", "majorized"}, {"child", sub.split_tree}};
  if (res.status != WitnessStatus::success) return res;
  int m = static_cast<int>(alphas.size());
  for (int s = 0; s < m; ++s) res.matrices.push_back(Matrix(-sub.matrices[s]));
  res.C = sub.matrices[m];
  std::vector<Spectrum> targets = alphas;
  targets.push_back(gamma);
  std::vector<Matrix> all = res.matrices;
  all.push_back(res.C);
  res.spectral_residual = spectra_deviation(all, targets);
  Matrix slack = -res.C;
  for (const Matrix& a : res.matrices) slack += a;
  auto [vals, u] = eig_hermitian(slack);
  res.slack_min_eigenvalue = vals.back();  // min eig of sum(A) - C
  return res;
}

void witness_cache_clear() { base_cache.clear(); }

}  // namespace horncone
