#pragma once

#include "tourney/digraph.hpp"
#include "tourney/numeric.hpp"
#include "tourney/polynomial.hpp"
#include "tourney/tournament.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace tourney {

/// Square integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  explicit IntMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0) {}

  std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t trace() const;
};

/// D - A with D the diagonal out-degree matrix.
IntMatrix laplacian(const Tournament& t);
IntMatrix laplacian(const Digraph& g);

/// 1 / tr(L). Throws SpectralError for an arcless digraph (entropy undefined).
Rational normalization_constant(const Tournament& t);
Rational normalization_constant(const Digraph& g);

/// Exact coefficients of det(xI - M), ascending; coeffs.back() == 1.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<long double> operator()(std::complex<long double> x) const;
  /// max |coefficient| as a double.
  double max_abs_coeff() const;
};

/// Faddeev-LeVerrier recurrence in exact integer arithmetic.
CharPoly char_poly(const IntMatrix& m);

/// Multiset of complex eigenvalues; conjugate pairs are exact mirror images.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;
  double residual_tol = 1e-10;

  std::size_t size() const { return eigenvalues.size(); }
  std::complex<double> sum() const;
  /// sum of lambda^k, principal branch for non-integer k; zero eigenvalues contribute 0.
  std::complex<double> power_sum(double k) const;
  Spectrum scaled(double factor) const;
  bool is_real(double tol = 1e-9) const;
};

/// Roots of p with multiplicity. Exact zero roots are split off, the rest is split into
/// square-free factors whose simple roots are found by Aberth iteration and polished by
/// Newton steps in 50-digit arithmetic. Throws
/// SpectralError if the iteration does not converge.
Spectrum roots(const CharPoly& p, double tol = 1e-10);

/// max over returned roots of |p(lambda)| / (max|coeff| * max(1,|lambda|)^deg).
double relative_residual(const CharPoly& p, const Spectrum& s);

/// Spectrum of the normalized Laplacian L / tr(L).
Spectrum normalized_spectrum(const Tournament& t, double tol = 1e-10);
Spectrum normalized_spectrum(const Digraph& g, double tol = 1e-10);

/// {0, (1 +- i/sqrt(n))/(n-1) each with multiplicity (n-1)/2} for n = 3 mod 4.
Spectrum doubly_regular_spectrum(int n);

/// tr(M^k) in exact integer arithmetic.
BigInt laplacian_power_trace(const IntMatrix& lap, int k);

/// sum of lambda^k over spec(L / tr L), computed as tr(L^k) / tr(L)^k.
Rational power_sum_trace(const Tournament& t, int k);
Rational power_sum_trace(const Digraph& g, int k);

}  // namespace tourney
