#pragma once

#include "tourney/numeric.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense polynomial over Q, coefficients in ascending degree; no trailing zeros.
using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p);
int degree(const RationalPoly& p);
RationalPoly derivative(const RationalPoly& p);
/// Quotient and remainder; throws on division by the zero polynomial.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic greatest common divisor.
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// Yun's square-free decomposition: f = c * prod factor_i^multiplicity_i with square-free,
/// pairwise coprime, monic factors of positive degree.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f);

struct AberthOptions {
  int max_iterations = 500;
  /// A root is converged once its correction satisfies |dz| < step_tol * (1 + |z|) or
  /// |p(z)| is within the rounding error of evaluating p at z.
  long double step_tol = 1e-13L;
};

/// All complex roots of a polynomial with simple roots (Aberth-Ehrlich iteration).
/// Throws SpectralError if the iteration cap is reached.
std::vector<std::complex<long double>> aberth_roots(std::span<const long double> ascending_coeffs,
                                                    const AberthOptions& options = {});

}  // namespace tourney
