#include "spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace horncone {

Spectrum::Spectrum(std::vector<Rat> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[i - 1])
      throw std::invalid_argument("spectrum not weakly decreasing at position " +
                                  std::to_string(i + 1));
  }
}

Spectrum::Spectrum(const Partition& p) {
  for (int i = 0; i < static_cast<int>(p.parts().size()); ++i) values_.emplace_back(p[i]);
}

Rat Spectrum::total() const {
  Rat t = 0;
  for (const Rat& v : values_) t += v;
  return t;
}

bool Spectrum::integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rat& v) { return denominator(v) == 1; });
}

bool Spectrum::is_partition() const {
  return integral() && (values_.empty() || values_.back() >= 0);
}

Partition Spectrum::to_partition() const {
  if (!is_partition()) throw std::invalid_argument("spectrum is not a partition");
  std::vector<int> parts;
  for (const Rat& v : values_) parts.push_back(static_cast<int>(numerator(v)));
  return Partition(std::move(parts));
}

std::vector<double> Spectrum::to_doubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const Rat& v : values_) out.push_back(rat_to_double(v));
  return out;
}

std::string Spectrum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(values_[i]);
  }
  return out;
}

Spectrum Spectrum::from_string(std::string_view s) {
  std::vector<Rat> values;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    values.push_back(rat_from_string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Spectrum(std::move(values));
}

std::vector<Spectrum> parse_spectra(std::string_view s) {
  std::vector<Spectrum> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto semi = s.find(';', pos);
    std::string_view tok = s.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
    out.push_back(Spectrum::from_string(tok));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].size() != out[0].size())
      throw std::invalid_argument("spectra have mixed lengths");
  return out;
}

std::string spectra_to_string(const std::vector<Spectrum>& spectra) {
  std::string out;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    if (i) out += ';';
    out += spectra[i].to_string();
  }
  return out;
}

Spectrum negate_reverse(const Spectrum& s) {
  std::vector<Rat> v(s.values().rbegin(), s.values().rend());
  for (Rat& x : v) x = -x;
  return Spectrum(std::move(v));
}

}  // namespace horncone
