#pragma once

#include "tourney/digraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tourney {

/// Column-stochastic matrix: entry (l,k) is the probability of one step from v_k to v_l.
struct MarkovMatrix {
  int n = 0;
  std::vector<double> a;

  MarkovMatrix() = default;
  explicit MarkovMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}

  double& operator()(int l, int k) { return a[static_cast<std::size_t>(l) * n + k]; }
  double operator()(int l, int k) const { return a[static_cast<std::size_t>(l) * n + k]; }
  double trace() const;
  MarkovMatrix operator*(const MarkovMatrix& other) const;
};

/// (I - L/g)^T: the lazy walk moving to each out-neighbour with probability 1/g.
/// Throws std::invalid_argument for an arcless digraph.
MarkovMatrix markov_matrix(const Digraph& g);

/// (I - S L)^T with S = diag(1/s_k). Requires s_k >= d+(v_k) and s_k > 0.
MarkovMatrix scaled_markov_matrix(const Digraph& g, std::span<const double> s);

/// Diagonal of M^j.
std::vector<double> return_probabilities(const Digraph& g, int j);

/// Number of series terms needed for a tail of at most epsilon: ceil(n / epsilon).
std::int64_t series_length(int n, double epsilon);

/// (1/ln 2)(tr M - sum_{j=2}^{J} tr(M^j)/(j(j-1))), J = series_length(n, epsilon).
/// Once M^j stops changing the remaining terms are summed in closed form.
double von_neumann_series(const Digraph& g, double epsilon);
double von_neumann_series_terms(const Digraph& g, std::int64_t terms);

/// sum lambda log2(1/lambda) over spec(L/g). Throws std::domain_error unless the
/// spectrum is real within 1e-9.
double von_neumann_eigen(const Digraph& g);

/// sum Re(-lambda log2 lambda) with the principal logarithm, for complex spectra.
double von_neumann_eigen_complex(const Digraph& g);

struct WalkConfig {
  std::int64_t trials = 100000;
  /// Upper limit on the walk length J.
  std::int64_t max_length = 1 << 20;
  std::uint64_t seed = 1;
};

struct WalkEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::int64_t length = 0;
};

/// Monte Carlo version of the series: every trial runs one lazy walk from each vertex
/// for J = min(series_length(n, epsilon), max_length) steps. Trials are split into
/// fixed chunks with generators derived from (seed, chunk), so the result depends only
/// on the configuration.
WalkEstimate von_neumann_walk(const Digraph& g, const WalkConfig& config, double epsilon);

/// Entry j (0..j_max) is the fraction of walks that sit on their start vertex after j steps,
/// an estimate of tr(M^j)/n.
std::vector<double> empirical_return_rates(const Digraph& g, const WalkConfig& config, int j_max);

struct EntropyBounds {
  double degree_bound = 0.0;
  double log_bound = 0.0;
  bool is_acyclic = false;
};

/// Shannon entropy of (d+_k / g) and log2 n.
EntropyBounds entropy_upper_bounds(const Digraph& g);

}  // namespace tourney
