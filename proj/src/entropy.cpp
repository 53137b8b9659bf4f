#include "tourney/entropy.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tourney {

std::string to_string(EntropyStatus s) {
  switch (s) {
    case EntropyStatus::Ok: return "OK";
    case EntropyStatus::NonpositiveSum: return "NONPOSITIVE_SUM";
    case EntropyStatus::NonrealSum: return "NONREAL_SUM";
    case EntropyStatus::ZeroTrace: return "ZERO_TRACE";
  }
  return "UNKNOWN";
}

namespace {

Rational pow_rational(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// tr(L^4) with L = D - A. Expanding (D - A)^4 and using that A has a zero diagonal
// and no 2-cycles leaves tr(D^4) - 4 tr(D A^3) + tr(A^4).
std::int64_t raw4_of(const Tournament& t) {
  const int n = t.size();
  std::vector<std::int64_t> a2(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a2[static_cast<std::size_t>(i) * n + j] = std::popcount(t.out_mask(i) & t.in_mask(j));
  std::int64_t d4 = 0, da3 = 0, a4 = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t s = t.score(i);
    d4 += s * s * s * s;
    std::int64_t a3ii = 0;
    for (int j = 0; j < n; ++j) {
      if (t.beats(j, i)) a3ii += a2[static_cast<std::size_t>(i) * n + j];
      a4 += a2[static_cast<std::size_t>(i) * n + j] * a2[static_cast<std::size_t>(j) * n + i];
    }
    da3 += s * a3ii;
  }
  return d4 - 4 * da3 + a4;
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) throw std::invalid_argument("alpha must be positive and different from 1");
}

}  // namespace

PowerSums power_sums(const Tournament& t) {
  const int n = t.size();
  if (n < 2) throw std::invalid_argument("power sums need n >= 2");
  PowerSums p;
  for (int s : t.scores()) {
    p.raw2 += static_cast<std::int64_t>(s) * s;
    p.raw3 += static_cast<std::int64_t>(s) * s * s;
  }
  p.raw3 -= 3 * count_3cycles(t);
  p.raw4 = raw4_of(t);
  const Rational c(1, binomial(n, 2));
  p.f2 = Rational(p.raw2) * pow_rational(c, 2);
  p.f3 = Rational(p.raw3) * pow_rational(c, 3);
  p.f4 = Rational(p.raw4) * pow_rational(c, 4);
  return p;
}

Rational power_sum(const Tournament& t, int alpha) {
  const PowerSums p = power_sums(t);
  switch (alpha) {
    case 2: return p.f2;
    case 3: return p.f3;
    case 4: return p.f4;
    default: throw std::invalid_argument("exact power sums are available for alpha in {2,3,4}");
  }
}

std::int64_t raw_power_sum(const Tournament& t, int alpha) {
  const PowerSums p = power_sums(t);
  switch (alpha) {
    case 2: return p.raw2;
    case 3: return p.raw3;
    case 4: return p.raw4;
    default: throw std::invalid_argument("exact power sums are available for alpha in {2,3,4}");
  }
}

EntropyValue renyi_exact(const Tournament& t, int alpha) {
  const Rational f = power_sum(t, alpha);
  if (f <= 0) return EntropyValue::undefined(EntropyStatus::NonpositiveSum);
  return EntropyValue::ok(log2_rational(f) / (1.0 - alpha));
}

Rational h_star(const Tournament& t, int alpha) {
  if (alpha < 2) throw std::invalid_argument("H* needs an integer alpha >= 2");
  if (alpha <= 4) return -power_sum(t, alpha);
  return -power_sum_trace(t, alpha);
}

EntropyValue renyi_from_spectrum(const Spectrum& s, double alpha) {
  require_alpha(alpha);
  const std::complex<double> sum = s.power_sum(alpha);
  double scale = 0.0;
  for (const auto& z : s.eigenvalues) scale += std::pow(std::abs(z), alpha);
  if (scale == 0.0) return EntropyValue::undefined(EntropyStatus::ZeroTrace);
  if (std::abs(sum.imag()) > 1e-9) return EntropyValue::undefined(EntropyStatus::NonrealSum);
  // A cancelling sum such as 2 r^3 cos(pi/2) lands on rounding noise, not on zero.
  if (sum.real() <= 1e-12 * scale) return EntropyValue::undefined(EntropyStatus::NonpositiveSum);
  return EntropyValue::ok(std::log2(sum.real()) / (1.0 - alpha));
}

EntropyValue renyi_numeric(const Tournament& t, double alpha) {
  require_alpha(alpha);
  if (t.size() < 2) return EntropyValue::undefined(EntropyStatus::ZeroTrace);
  return renyi_from_spectrum(normalized_spectrum(t), alpha);
}

EntropyValue closed_form_C3(double alpha) {
  require_alpha(alpha);
  // 2 (1/sqrt 3)^alpha cos(pi alpha / 6), taken in logs to avoid underflow.
  const double c = std::cos(std::numbers::pi * alpha / 6.0);
  if (c <= 1e-12) return EntropyValue::undefined(EntropyStatus::NonpositiveSum);
  const double log_sum = 1.0 - alpha * std::log2(std::sqrt(3.0)) + std::log2(c);
  return EntropyValue::ok(log_sum / (1.0 - alpha));
}

EntropyValue closed_form_TT3(double alpha) {
  require_alpha(alpha);
  // (1/3)^alpha + (2/3)^alpha = (2/3)^alpha (1 + 2^-alpha).
  const double log_sum = alpha * std::log2(2.0 / 3.0) + std::log2(1.0 + std::exp2(-alpha));
  return EntropyValue::ok(log_sum / (1.0 - alpha));
}

std::optional<Tournament> regularize_step(const Tournament& t) {
  const int n = t.size();
  const auto s = t.scores();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || s[i] + 2 > s[j]) continue;
      if (t.beats(j, i)) return t.with_arc_reversed(j, i);
      // i -> j and s_j > s_i, so some u has j -> u -> i.
      const std::uint64_t mid = t.out_mask(j) & t.in_mask(i);
      if (mid == 0) throw std::logic_error("no 2-path between a low and a high score vertex");
      const int u = std::countr_zero(mid);
      return t.with_arc_reversed(j, u).with_arc_reversed(u, i);
    }
  return std::nullopt;
}

std::optional<Tournament> transitivize_step(const Tournament& t) {
  const int n = t.size();
  const auto s = t.scores();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s[i] == s[j]) return t.beats(i, j) ? t.with_arc_reversed(i, j) : t.with_arc_reversed(j, i);
  return std::nullopt;
}

double shannon(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw std::invalid_argument("probabilities must be non-negative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

}  // namespace tourney
