#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace horncone {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
   Parsing additionally accepts decimal literals ("1.5" -> 3/2). */
std::string rat_to_string(const Rat& r);
Rat rat_from_string(std::string_view s);

double rat_to_double(const Rat& r);

}  // namespace horncone
