#include "index_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace horncone {

IndexSet::IndexSet(std::vector<int> elements, int ambient)
    : elements_(std::move(elements)), ambient_(ambient) {
  if (ambient_ < 0) throw std::invalid_argument("index set: negative ambient");
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] < 1 || elements_[k] > ambient_)
      throw std::invalid_argument("index set: element out of [1..n]");
    if (k > 0 && elements_[k] <= elements_[k - 1])
      throw std::invalid_argument("index set: not strictly increasing");
  }
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

IndexSet IndexSet::complement() const {
  std::vector<int> out;
  out.reserve(ambient_ - cardinality());
  for (int i = 1; i <= ambient_; ++i)
    if (!contains(i)) out.push_back(i);
  return IndexSet(std::move(out), ambient_);
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(elements_[k]);
  }
  return out + "}";
}

IndexSet IndexSet::from_string(std::string_view s, int ambient) {
  std::string_view body = s;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  std::vector<int> elems;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      std::string_view tok =
          body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("bad index set: '" + std::string(s) + "'");
      elems.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return IndexSet(std::move(elems), ambient);
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.elements().begin(), a.elements().end(),
                                                b.elements().begin(), b.elements().end());
}

IndexSet restrict_to(const IndexSet& I, const IndexSet& P) {
  std::vector<int> out;
  out.reserve(P.cardinality());
  for (int p : P.elements()) {
    if (p < 1 || p > I.cardinality())
      throw std::invalid_argument("restrict_to: position out of range");
    out.push_back(I.elements()[p - 1]);
  }
  return IndexSet(std::move(out), I.ambient());
}

IndexSet extend_by(const IndexSet& I, const IndexSet& P) {
  IndexSet comp = I.complement();
  std::vector<int> out = I.elements();
  for (int p : P.elements()) {
    if (p < 1 || p > comp.cardinality())
      throw std::invalid_argument("extend_by: position out of range");
    out.push_back(comp.elements()[p - 1]);
  }
  std::sort(out.begin(), out.end());
  return IndexSet(std::move(out), I.ambient());
}

bool leq(const IndexSet& H, const IndexSet& I) {
  if (H.cardinality() != I.cardinality()) throw std::invalid_argument("leq: cardinality mismatch");
  for (int k = 0; k < H.cardinality(); ++k)
    if (H.elements()[k] > I.elements()[k]) return false;
  return true;
}

bool leq_by_prefix_counts(const IndexSet& H, const IndexSet& I) {
  if (H.cardinality() != I.cardinality())
    throw std::invalid_argument("leq_by_prefix_counts: cardinality mismatch");
  int n = std::max(H.ambient(), I.ambient());
  int ch = 0, ci = 0;
  std::size_t kh = 0, ki = 0;
  for (int t = 1; t <= n; ++t) {
    if (kh < H.elements().size() && H.elements()[kh] == t) ++ch, ++kh;
    if (ki < I.elements().size() && I.elements()[ki] == t) ++ci, ++ki;
    if (ch < ci) return false;
  }
  return true;
}

std::vector<IndexSet> all_subsets(int n, int r) {
  std::vector<IndexSet> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int k = 0; k < r; ++k) cur[k] = k + 1;
  while (true) {
    out.emplace_back(cur, n);
    int k = r - 1;
    while (k >= 0 && cur[k] == n - (r - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Partition lambda_of_index_set(const IndexSet& I) {
  int r = I.cardinality();
  std::vector<int> parts(r);
  for (int k = 0; k < r; ++k) parts[k] = I.elements()[r - 1 - k] - (r - k);
  return Partition(std::move(parts));
}

Partition omega_partition(const IndexSet& I) {
  int r = I.cardinality(), n = I.ambient();
  std::vector<int> parts(r);
  for (int k = 0; k < r; ++k) parts[k] = n - r + (k + 1) - I.elements()[k];
  return Partition(std::move(parts));
}

IndexSet reflect(const IndexSet& I) {
  int n = I.ambient();
  std::vector<int> out(I.cardinality());
  for (int k = 0; k < I.cardinality(); ++k)
    out[k] = n + 1 - I.elements()[I.cardinality() - 1 - k];
  return IndexSet(std::move(out), n);
}

IndexTuple::IndexTuple(std::vector<IndexSet> sets) : sets_(std::move(sets)) {
  for (std::size_t s = 1; s < sets_.size(); ++s) {
    if (sets_[s].cardinality() != sets_[0].cardinality() ||
        sets_[s].ambient() != sets_[0].ambient())
      throw std::invalid_argument("index tuple: mixed cardinality or ambient");
  }
}

std::string IndexTuple::to_string() const {
  std::string out = "(";
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    if (s) out += ',';
    out += sets_[s].to_string();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const IndexTuple& a, const IndexTuple& b) {
  return std::lexicographical_compare_three_way(a.sets().begin(), a.sets().end(),
                                                b.sets().begin(), b.sets().end());
}

}  // namespace horncone
