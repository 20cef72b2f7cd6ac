#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt big_pow(BigInt base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

// GCC 11 flags the limb copy inside cpp_int's right shift with bogus bounds.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
/// Natural logarithm of a positive big integer, accurate beyond the double
/// range.
inline double big_log(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}
#pragma GCC diagnostic pop

}  // namespace turan
