#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace horncone {

/* Weakly decreasing sequence of rationals: an eigenvalue spectrum. */
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Rat> values);
  explicit Spectrum(const Partition& p);

  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](std::size_t i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }
  Rat total() const;
  bool integral() const;  // all denominators 1
  bool is_partition() const;
  Partition to_partition() const;  // requires integral() and nonnegative
  std::vector<double> to_doubles() const;

  std::string to_string() const;  // "3/2,1,0"
  // Throws std::invalid_argument; a sortedness violation reports the 1-based
  // position at which the order breaks.
  static Spectrum from_string(std::string_view s);

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
  friend bool operator<(const Spectrum& a, const Spectrum& b) {
    return std::lexicographical_compare(a.values_.begin(), a.values_.end(),
                                        b.values_.begin(), b.values_.end());
  }

 private:
  std::vector<Rat> values_;
};

// "1,1;1,0" -> two spectra (semicolon-separated; all must share one length).
std::vector<Spectrum> parse_spectra(std::string_view s);
std::string spectra_to_string(const std::vector<Spectrum>& spectra);

// negrev(x)_i = -x_{n+1-i}: the spectrum of -A given the spectrum of A.
Spectrum negate_reverse(const Spectrum& s);

}  // namespace horncone
