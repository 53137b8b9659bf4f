#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tourney {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

// log2 of a positive rational, accurate for very large numerators/denominators.
double log2_rational(const Rational& q);

double to_double(const Rational& q);

std::string to_string(const Rational& q);

}  // namespace tourney
