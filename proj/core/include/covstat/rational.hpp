#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace covstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string rat_str(const Rational& q) {
  std::string s = numerator(q).convert_to<std::string>();
  if (denominator(q) != 1) s += "/" + denominator(q).convert_to<std::string>();
  return s;
}

}  // namespace covstat
