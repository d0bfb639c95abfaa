#include "partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace horncone {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

void Partition::validate() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition part negative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts not weakly decreasing");
  }
}

int Partition::length() const {
  int len = 0;
  while (len < static_cast<int>(parts_.size()) && parts_[len] > 0) ++len;
  return len;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::trimmed() const {
  Partition out;
  out.parts_.assign(parts_.begin(), parts_.begin() + length());
  return out;
}

Partition Partition::conjugate() const {
  Partition out;
  int len = length();
  if (len == 0) return out;
  out.parts_.resize(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j) {
    int cnt = 0;
    while (cnt < len && parts_[cnt] > j) ++cnt;
    out.parts_[j] = cnt;
  }
  return out;
}

bool Partition::contains(const Partition& mu) const {
  int len = mu.length();
  for (int i = 0; i < len; ++i)
    if ((*this)[i] < mu[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  int len = length();
  if (len == 0) return "0";
  std::string out;
  for (int i = 0; i < len; ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::from_string(std::string_view s) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw std::invalid_argument("bad partition: '" + std::string(s) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool operator==(const Partition& a, const Partition& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  int la = a.length(), lb = b.length();
  for (int i = 0; i < std::max(la, lb); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

bool fits(const Partition& p, const BoxBound& box) {
  return p.length() <= box.rows && p[0] <= box.cols;
}

static void gen_weight(int w, int max_len, int max_part, std::vector<int>& cur,
                       std::vector<Partition>& out) {
  if (w == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  int hi = std::min(w, max_part);
  if (!cur.empty()) hi = std::min(hi, cur.back());
  for (int v = hi; v >= 1; --v) {
    if (static_cast<long long>(v) * max_len < w) break;  // cannot reach w
    cur.push_back(v);
    gen_weight(w - v, max_len - 1, max_part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of_weight(int w, int max_len, int max_part) {
  std::vector<Partition> out;
  if (w < 0) return out;
  std::vector<int> cur;
  gen_weight(w, max_len, max_part, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(const BoxBound& box) {
  std::vector<Partition> out;
  for (int w = 0; w <= box.rows * box.cols; ++w) {
    auto layer = partitions_of_weight(w, box.rows, box.cols);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

static void gen_sub(const Partition& lambda, std::size_t row, int prev, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (row == static_cast<std::size_t>(lambda.length())) {
    out.emplace_back(cur);
    return;
  }
  int hi = std::min(prev, lambda[row]);
  for (int v = 0; v <= hi; ++v) {
    cur.push_back(v);
    gen_sub(lambda, row + 1, v, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_sub(lambda, 0, lambda[0], cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace horncone
