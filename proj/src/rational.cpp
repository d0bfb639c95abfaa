#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace horncone {

std::string rat_to_string(const Rat& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

static bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rat rat_from_string(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
  if (body.empty()) fail();

  Rat value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) fail();
    std::string_view p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) fail();
    BigInt den{std::string(q)};
    if (den == 0) fail();
    value = Rat(BigInt(std::string(p)), den);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail();
    if (!ip.empty() && !all_digits(ip)) fail();
    if (!fp.empty() && !all_digits(fp)) fail();
    BigInt num = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    BigInt den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rat(num, den);
  } else {
    if (!all_digits(body)) fail();
    value = Rat(BigInt(std::string(body)));
  }
  if (neg) value = -value;
  return value;
}

double rat_to_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace horncone
