#include "tourney/walks.hpp"

#include "tourney/entropy.hpp"
#include "tourney/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tourney {

double MarkovMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

MarkovMatrix MarkovMatrix::operator*(const MarkovMatrix& other) const {
  MarkovMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const double x = (*this)(i, l);
      if (x == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += x * other(l, j);
    }
  return r;
}

MarkovMatrix scaled_markov_matrix(const Digraph& g, std::span<const double> s) {
  const int n = g.size();
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("one scale per vertex is required");
  MarkovMatrix m(n);
  for (int k = 0; k < n; ++k) {
    const int d = g.out_degree(k);
    if (!(s[k] > 0.0) || s[k] < d) throw std::invalid_argument("scales must satisfy s_k >= d+(v_k) and s_k > 0");
    m(k, k) = 1.0 - d / s[k];
    for (int l = 0; l < n; ++l)
      if (g.has_arc(k, l)) m(l, k) = 1.0 / s[k];
  }
  return m;
}

MarkovMatrix markov_matrix(const Digraph& g) {
  if (g.total_out_degree() == 0) throw std::invalid_argument("the digraph has no arcs");
  const std::vector<double> s(g.size(), static_cast<double>(g.total_out_degree()));
  return scaled_markov_matrix(g, s);
}

std::vector<double> return_probabilities(const Digraph& g, int j) {
  if (j < 0) throw std::invalid_argument("walk length must be non-negative");
  const MarkovMatrix m = markov_matrix(g);
  MarkovMatrix p(m.n);
  for (int i = 0; i < m.n; ++i) p(i, i) = 1.0;
  MarkovMatrix base = m;
  for (int e = j; e > 0; e >>= 1) {
    if (e & 1) p = p * base;
    if (e > 1) base = base * base;
  }
  std::vector<double> out(m.n);
  for (int i = 0; i < m.n; ++i) out[i] = p(i, i);
  return out;
}

std::int64_t series_length(int n, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(n / epsilon)));
}

double von_neumann_series_terms(const Digraph& g, std::int64_t terms) {
  const MarkovMatrix m = markov_matrix(g);
  double sum = 0.0;
  MarkovMatrix p = m;
  for (std::int64_t j = 2; j <= terms; ++j) {
    p = p * m;
    const double jd = static_cast<double>(j);
    sum += p.trace() / (jd * (jd - 1.0));
    if (std::has_single_bit(static_cast<std::uint64_t>(j)) && j < terms) {
      const MarkovMatrix q = p * p;
      double diff = 0.0;
      for (std::size_t i = 0; i < q.a.size(); ++i) diff = std::max(diff, std::abs(q.a[i] - p.a[i]));
      if (diff < 1e-14) {
        // sum_{i=j+1}^{J} 1/(i(i-1)) = 1/j - 1/J
        sum += p.trace() * (1.0 / jd - 1.0 / static_cast<double>(terms));
        break;
      }
    }
  }
  return (m.trace() - sum) / std::numbers::ln2;
}

double von_neumann_series(const Digraph& g, double epsilon) {
  return von_neumann_series_terms(g, series_length(g.size(), epsilon));
}

double von_neumann_eigen(const Digraph& g) {
  const Spectrum s = normalized_spectrum(g);
  if (!s.is_real(1e-9)) throw std::domain_error("spectrum is not real; use the series form");
  double h = 0.0;
  for (const auto& z : s.eigenvalues) {
    const double x = z.real();
    if (x > 1e-15) h -= x * std::log2(x);
  }
  return h;
}

double von_neumann_eigen_complex(const Digraph& g) {
  const Spectrum s = normalized_spectrum(g);
  double h = 0.0;
  for (const auto& z : s.eigenvalues) {
    if (std::abs(z) <= 1e-15) continue;
    h -= (z * std::log(z)).real();
  }
  return h / std::numbers::ln2;
}

namespace {

constexpr std::int64_t kChunk = 4096;

struct Walker {
  const Digraph& g;
  std::vector<std::vector<int>> out;
  std::vector<double> leave;

  explicit Walker(const Digraph& graph) : g(graph), out(graph.size()), leave(graph.size()) {
    for (int v = 0; v < g.size(); ++v) {
      for (std::uint64_t m = g.out_mask(v); m; m &= m - 1) out[v].push_back(std::countr_zero(m));
      leave[v] = static_cast<double>(out[v].size()) / static_cast<double>(g.total_out_degree());
    }
  }

  // Calls visit(v, first, last) for every maximal time interval [first, last] within
  // [0, steps] that the walk from start spends on vertex v.
  template <class Visit>
  void run(int start, std::int64_t steps, std::mt19937_64& rng, Visit&& visit) const {
    int v = start;
    std::int64_t t = 0;
    while (t <= steps) {
      std::int64_t stay = steps - t;
      if (leave[v] > 0.0) {
        std::geometric_distribution<std::int64_t> hold(leave[v]);
        stay = std::min(stay, hold(rng));
      }
      visit(v, t, t + stay);
      t += stay + 1;
      if (t > steps) break;
      std::uniform_int_distribution<std::size_t> pick(0, out[v].size() - 1);
      v = out[v][pick(rng)];
    }
  }
};

std::mt19937_64 chunk_rng(std::uint64_t seed, std::int64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

void check_config(const WalkConfig& c) {
  if (c.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (c.max_length < 1) throw std::invalid_argument("max_length must be at least 1");
}

}  // namespace

WalkEstimate von_neumann_walk(const Digraph& g, const WalkConfig& config, double epsilon) {
  check_config(config);
  if (g.total_out_degree() == 0) throw std::invalid_argument("the digraph has no arcs");
  const int n = g.size();
  const std::int64_t length = std::min(series_length(n, epsilon), config.max_length);
  const Walker walker(g);
  const double trace_m = n - 1.0;
  double mean = 0.0, m2 = 0.0;
  std::int64_t count = 0;
  for (std::int64_t first = 0, chunk = 0; first < config.trials; first += kChunk, ++chunk) {
    auto rng = chunk_rng(config.seed, chunk);
    const std::int64_t end = std::min(config.trials, first + kChunk);
    for (std::int64_t trial = first; trial < end; ++trial) {
      double returns = 0.0;
      for (int k = 0; k < n; ++k)
        walker.run(k, length, rng, [&](int v, std::int64_t a, std::int64_t b) {
          if (v != k || b < 2) return;
          // sum_{j=max(a,2)}^{b} 1/(j(j-1)) = 1/(max(a,2)-1) - 1/b
          const double lo = static_cast<double>(std::max<std::int64_t>(a, 2));
          returns += 1.0 / (lo - 1.0) - 1.0 / static_cast<double>(b);
        });
      const double x = trace_m - returns;
      ++count;
      const double delta = x - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (x - mean);
    }
  }
  WalkEstimate e;
  e.length = length;
  e.estimate = mean / std::numbers::ln2;
  const double var = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  e.standard_error = std::sqrt(var / static_cast<double>(count)) / std::numbers::ln2;
  return e;
}

std::vector<double> empirical_return_rates(const Digraph& g, const WalkConfig& config, int j_max) {
  check_config(config);
  if (g.total_out_degree() == 0) throw std::invalid_argument("the digraph has no arcs");
  if (j_max < 0) throw std::invalid_argument("j_max must be non-negative");
  const int n = g.size();
  const Walker walker(g);
  std::vector<double> hits(static_cast<std::size_t>(j_max) + 1, 0.0);
  for (std::int64_t first = 0, chunk = 0; first < config.trials; first += kChunk, ++chunk) {
    auto rng = chunk_rng(config.seed, chunk);
    const std::int64_t end = std::min(config.trials, first + kChunk);
    for (std::int64_t trial = first; trial < end; ++trial)
      for (int k = 0; k < n; ++k)
        walker.run(k, j_max, rng, [&](int v, std::int64_t a, std::int64_t b) {
          if (v != k) return;
          for (std::int64_t j = a; j <= b; ++j) hits[j] += 1.0;
        });
  }
  const double walks = static_cast<double>(config.trials) * n;
  for (auto& h : hits) h /= walks;
  return hits;
}

EntropyBounds entropy_upper_bounds(const Digraph& g) {
  if (g.total_out_degree() == 0) throw std::invalid_argument("the digraph has no arcs");
  std::vector<double> p(g.size());
  for (int k = 0; k < g.size(); ++k)
    p[k] = static_cast<double>(g.out_degree(k)) / static_cast<double>(g.total_out_degree());
  EntropyBounds b;
  b.degree_bound = shannon(p);
  b.log_bound = std::log2(static_cast<double>(g.size()));
  b.is_acyclic = g.is_acyclic();
  return b;
}

}  // namespace tourney
