#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace horncone {

/* Integer partition: weakly decreasing nonnegative parts.  Trailing zeros are
   permitted in storage; equality and ordering ignore them. */
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  // 0-based access; indices past the stored parts read as 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const;  // number of nonzero parts
  int weight() const;
  bool empty() const { return length() == 0; }

  Partition trimmed() const;
  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i

  std::string to_string() const;  // "3,2,1"; empty partition -> "0"
  static Partition from_string(std::string_view s);

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  void validate() const;
};

struct BoxBound {
  int rows = 0;  // r >= 1
  int cols = 0;  // n - r >= 0
};

bool fits(const Partition& p, const BoxBound& box);

// All partitions of weight w with at most max_len parts, each part <= max_part.
std::vector<Partition> partitions_of_weight(int w, int max_len, int max_part);
// All partitions (any weight) fitting in the box, ordered by weight then lex.
std::vector<Partition> partitions_in_box(const BoxBound& box);
// All mu with mu \subseteq lambda (componentwise), lex order.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace horncone
