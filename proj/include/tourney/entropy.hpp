#pragma once

#include "tourney/numeric.hpp"
#include "tourney/spectral.hpp"
#include "tourney/tournament.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace tourney {

enum class EntropyStatus { Ok, NonpositiveSum, NonrealSum, ZeroTrace };

std::string to_string(EntropyStatus s);

/// A Renyi entropy, or the reason it is undefined.
struct EntropyValue {
  std::optional<double> value;
  EntropyStatus reason = EntropyStatus::Ok;

  static EntropyValue ok(double v) { return {v, EntropyStatus::Ok}; }
  static EntropyValue undefined(EntropyStatus why) { return {std::nullopt, why}; }
  bool defined() const { return value.has_value(); }
};

/// Power sums of the normalized Laplacian spectrum. raw_k = C(n,2)^k * f_k.
struct PowerSums {
  Rational f2, f3, f4;
  std::int64_t raw2 = 0;
  std::int64_t raw3 = 0;
  std::int64_t raw4 = 0;
};

/// raw2 = sum s_i^2, raw3 = sum s_i^3 - 3 c3, raw4 = tr(L^4) from integer matrix products.
/// Throws std::invalid_argument for n < 2.
PowerSums power_sums(const Tournament& t);

/// f_alpha for alpha in {2,3,4}.
Rational power_sum(const Tournament& t, int alpha);
std::int64_t raw_power_sum(const Tournament& t, int alpha);

/// log2(f_alpha)/(1-alpha) on the exact power sum, alpha in {2,3,4}.
EntropyValue renyi_exact(const Tournament& t, int alpha);

/// H*_alpha = -f_alpha, exact, for any integer alpha >= 2.
Rational h_star(const Tournament& t, int alpha);

/// Renyi entropy of a spectrum for real alpha > 0, alpha != 1, using principal powers.
/// Throws std::invalid_argument for an invalid alpha.
EntropyValue renyi_from_spectrum(const Spectrum& s, double alpha);
EntropyValue renyi_numeric(const Tournament& t, double alpha);

/// Closed forms on the 3-cycle and the transitive 3-tournament.
EntropyValue closed_form_C3(double alpha);
EntropyValue closed_form_TT3(double alpha);

/// Moves one unit of score from a vertex j to a vertex i with s_i + 2 <= s_j, or
/// nullopt when all scores differ by at most one. The least such pair (i,j) is used,
/// and the least u when the 2-path j -> u -> i has to be reversed.
std::optional<Tournament> regularize_step(const Tournament& t);

/// Reverses the arc between the least pair of vertices with equal scores, or nullopt
/// when the tournament is transitive.
std::optional<Tournament> transitivize_step(const Tournament& t);

/// sum p_i log2(1/p_i). Throws std::invalid_argument unless p is a probability vector.
double shannon(std::span<const double> p);

}  // namespace tourney
