#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace arithproj {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

inline Rational rpow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(boost::multiprecision::numerator(base), exp),
                  ipow(boost::multiprecision::denominator(base), exp));
}

/// x <= N^(p/q), decided as x^q <= N^p. Requires x >= 0, N >= 0, q >= 1.
inline bool leq_fractional_power(const BigInt& x, const BigInt& n, std::uint64_t p,
                                 std::uint64_t q) {
  return ipow(x, q) <= ipow(n, p);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace arithproj
