#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace brandt {

// Census counts reach n^8 and solution sums n^10; everything is kept exact.
using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt num(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt den(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

}  // namespace brandt
