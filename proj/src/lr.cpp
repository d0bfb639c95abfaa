#include "lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace horncone {

namespace {

/* DFS over skew fillings in reverse reading order (top row first, each row
   right to left).  Every prefix of the reverse reading word is checked for
   the lattice property incrementally: after placing value v we need
   count(v) <= count(v-1).  Rows weakly increase left to right, columns
   strictly increase top to bottom, and content never exceeds mu. */
struct Enumerator {
  const std::vector<int>& lam;  // padded to nu's length
  const std::vector<int>& nu;
  const std::vector<int>& mu;
  int rows;
  int vals;
  std::vector<std::vector<int>> cell;  // cell[i][j], value 1..vals, 0 = outside/empty
  std::vector<int> count;
  BigInt total = 0;

  Enumerator(const std::vector<int>& lam_, const std::vector<int>& nu_,
             const std::vector<int>& mu_)
      : lam(lam_), nu(nu_), mu(mu_), rows(static_cast<int>(nu_.size())),
        vals(static_cast<int>(mu_.size())), count(mu_.size() + 1, 0) {
    cell.resize(rows);
    for (int i = 0; i < rows; ++i) cell[i].assign(nu[i], 0);
  }

  void run() { fill(0, 0); }

  // Fill row i from column nu[i]-1 down to lam[i]; then next row.
  void fill(int i, int done_in_row) {
    if (i == rows) {
      ++total;
      return;
    }
    int width = nu[i] - lam[i];
    if (done_in_row == width) {
      fill(i + 1, 0);
      return;
    }
    int j = nu[i] - 1 - done_in_row;
    int lo = 1, hi = std::min(vals, i + 1);  // lattice forces value <= row index + 1
    if (j + 1 < nu[i]) hi = std::min(hi, cell[i][j + 1]);  // right neighbour
    if (i > 0 && j < nu[i - 1] && j >= lam[i - 1]) lo = std::max(lo, cell[i - 1][j] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;            // content bound
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice
      cell[i][j] = v;
      ++count[v];
      fill(i, done_in_row + 1);
      --count[v];
      cell[i][j] = 0;
    }
  }
};

using MemoKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
thread_local std::map<MemoKey, BigInt> lr_memo;

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Partition lam = lambda.trimmed(), m = mu.trimmed(), n = nu.trimmed();
  if (lam.weight() + m.weight() != n.weight()) return 0;
  if (!n.contains(lam)) return 0;
  if (m.empty()) return 1;  // weights then force nu == lambda
  if (n.length() > lam.length() + m.length()) return 0;

  MemoKey key{lam.parts(), m.parts(), n.parts()};
  if (auto it = lr_memo.find(key); it != lr_memo.end()) return it->second;

  std::vector<int> lam_pad(n.length(), 0);
  for (int i = 0; i < lam.length(); ++i) lam_pad[i] = lam[i];
  Enumerator e(lam_pad, n.parts(), m.parts());
  e.run();
  lr_memo.emplace(std::move(key), e.total);
  return e.total;
}

BigInt SchubertExpansion::coefficient(const Partition& nu) const {
  auto it = terms.find(nu.trimmed());
  return it == terms.end() ? BigInt(0) : it->second;
}

namespace {

// Partitions nu with lambda \subseteq nu, |nu| = |lambda| + w, inside the box.
void candidates(const Partition& lam, int w, const BoxBound& box, std::vector<int>& cur, int row,
                std::vector<Partition>& out) {
  if (row == box.rows) {
    if (w == 0) out.emplace_back(cur);
    return;
  }
  int lo = lam[row];
  int hi = std::min(box.cols, row == 0 ? box.cols : cur[row - 1]);
  for (int v = lo; v <= hi; ++v) {
    int rest = w - (v - lam[row]);
    if (rest < 0) break;
    cur.push_back(v);
    candidates(lam, rest, box, cur, row + 1, out);
    cur.pop_back();
  }
}

SchubertExpansion pair_product(const SchubertExpansion& acc, const Partition& mu) {
  SchubertExpansion out;
  out.bound = acc.bound;
  int w = mu.weight();
  for (const auto& [lam, c] : acc.terms) {
    std::vector<Partition> nus;
    std::vector<int> cur;
    candidates(lam, w, out.bound, cur, 0, nus);
    for (const Partition& nu : nus) {
      BigInt lr = lr_coefficient(lam, mu, nu);
      if (lr != 0) out.terms[nu.trimmed()] += c * lr;
    }
  }
  return out;
}

}  // namespace

SchubertExpansion multi_product(const std::vector<Partition>& factors, const BoxBound& bound) {
  if (bound.rows < 1 || bound.cols < 0) throw std::invalid_argument("multi_product: bad box");
  SchubertExpansion acc;
  acc.bound = bound;
  acc.terms[Partition{}] = 1;  // identity class
  for (const Partition& f : factors) {
    if (!fits(f, bound)) throw std::invalid_argument("multi_product: factor outside box");
    acc = pair_product(acc, f.trimmed());
    if (acc.zero()) break;
  }
  return acc;
}

BigInt tensor_multiplicity(const std::vector<Partition>& factors, const Partition& nu) {
  int len_sum = 0, weight_sum = 0;
  for (const Partition& f : factors) {
    len_sum += f.length();
    weight_sum += f.weight();
  }
  // A box this large never truncates: |nu| = sum of weights forces
  // length(nu) <= sum of lengths when the coefficient is nonzero.
  BoxBound big{std::max({1, len_sum, nu.length()}), std::max(weight_sum, nu[0])};
  SchubertExpansion e = multi_product(factors, big);
  return e.coefficient(nu);
}

std::tuple<Partition, Partition, Partition> strip_first_rows(const Partition& lambda,
                                                             const Partition& mu,
                                                             const Partition& nu) {
  if (lambda[0] + mu[0] != nu[0])
    throw std::invalid_argument("strip_first_rows: lambda_1 + mu_1 != nu_1");
  auto drop = [](const Partition& p) {
    std::vector<int> v(p.parts().begin() + (p.parts().empty() ? 0 : 1), p.parts().end());
    return Partition(std::move(v));
  };
  return {drop(lambda.trimmed()), drop(mu.trimmed()), drop(nu.trimmed())};
}

}  // namespace horncone
