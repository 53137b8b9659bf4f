#include "tourney/numeric.hpp"

#include <cmath>

namespace tourney {

namespace {

double log2_int(const BigInt& x) {
  // long double covers magnitudes up to 2^16383, far beyond any power sum used here.
  return static_cast<double>(std::log2(x.convert_to<long double>()));
}

}  // namespace

double log2_rational(const Rational& q) {
  return log2_int(boost::multiprecision::numerator(q)) - log2_int(boost::multiprecision::denominator(q));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace tourney
