#include "oracles.hpp"

#include "tourney/enumeration.hpp"
#include "tourney/spectral.hpp"
#include "tourney/walks.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace tourney;

namespace {

// Straight truncated series without any shortcut.
double plain_series(const Digraph& g, std::int64_t terms) {
  const auto m = oracle::markov(oracle::adjacency(g));
  auto p = m;
  double tr1 = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) tr1 += m[i][i];
  double sum = 0.0;
  for (std::int64_t j = 2; j <= terms; ++j) {
    p = oracle::multiply(p, m);
    double tr = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) tr += p[i][i];
    sum += tr / (static_cast<double>(j) * (j - 1));
  }
  return (tr1 - sum) / std::numbers::ln2;
}

double real_entropy(const std::vector<std::complex<double>>& eig) {
  double h = 0.0;
  for (const auto& z : eig)
    if (z.real() > 1e-15) h -= z.real() * std::log2(z.real());
  return h;
}

}  // namespace

TEST_CASE("Markov matrix is column-stochastic with the lazy-walk diagonal") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph g = oracle::random_digraph(2 + trial % 8, 0.4, rng);
    if (g.total_out_degree() == 0) continue;
    const MarkovMatrix m = markov_matrix(g);
    for (int k = 0; k < g.size(); ++k) {
      double col = 0.0;
      for (int l = 0; l < g.size(); ++l) {
        CHECK(m(l, k) >= 0.0);
        CHECK(m(l, k) <= 1.0);
        col += m(l, k);
      }
      CHECK(std::abs(col - 1.0) < 1e-12);
      CHECK(m(k, k) == doctest::Approx(1.0 - static_cast<double>(g.out_degree(k)) / g.total_out_degree()));
    }
  }
  const MarkovMatrix c3 = markov_matrix(Digraph::from_tournament(consecutive_rotational(3)));
  CHECK(c3(0, 0) == doctest::Approx(2.0 / 3));
  CHECK(c3(1, 0) == doctest::Approx(1.0 / 3));
  CHECK(c3(2, 0) == 0.0);
  const MarkovMatrix arc = markov_matrix(Digraph::from_arcs(2, {{0, 1}}));
  CHECK(arc(1, 0) == 1.0);
  CHECK(arc(1, 1) == 1.0);
  CHECK_THROWS_AS(markov_matrix(Digraph(3)), std::invalid_argument);
}

TEST_CASE("scaled Markov matrices stay stochastic for any s_k >= d_k") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> extra(0.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph g = oracle::random_digraph(3 + trial % 6, 0.5, rng);
    std::vector<double> s(g.size());
    for (int k = 0; k < g.size(); ++k) s[k] = std::max(1, g.out_degree(k)) + extra(rng);
    const MarkovMatrix m = scaled_markov_matrix(g, s);
    for (int k = 0; k < g.size(); ++k) {
      double col = 0.0;
      for (int l = 0; l < g.size(); ++l) {
        CHECK(m(l, k) >= 0.0);
        CHECK(m(l, k) <= 1.0);
        col += m(l, k);
      }
      CHECK(std::abs(col - 1.0) < 1e-12);
    }
  }
  const Digraph g = Digraph::from_arcs(2, {{0, 1}});
  CHECK_THROWS_AS(scaled_markov_matrix(g, std::vector<double>{0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("return probabilities") {
  const Digraph c3 = Digraph::from_tournament(consecutive_rotational(3));
  for (double p : return_probabilities(c3, 0)) CHECK(p == 1.0);
  for (double p : return_probabilities(c3, 1)) CHECK(p == doctest::Approx(2.0 / 3));
  // On an acyclic digraph a walk that leaves never returns.
  const Digraph tt = Digraph::from_tournament(transitive(5));
  for (int j : {1, 2, 5, 17}) {
    const auto r = return_probabilities(tt, j);
    for (int k = 0; k < 5; ++k)
      CHECK(r[k] == doctest::Approx(std::pow(1.0 - static_cast<double>(tt.out_degree(k)) / 10.0, j)).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalues of M lie in the closed unit disc") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph g = oracle::random_digraph(3 + trial % 6, 0.5, rng);
    if (g.total_out_degree() == 0) continue;
    for (const auto& z : normalized_spectrum(g).eigenvalues) CHECK(std::abs(1.0 - z) <= 1.0 + 1e-9);
  }
}

TEST_CASE("series shortcut matches the plain truncated series") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    const Digraph g = trial % 2 ? Digraph::from_tournament(oracle::random_tournament(3 + trial % 5, rng))
                                : oracle::random_digraph(3 + trial % 5, 0.5, rng);
    if (g.total_out_degree() == 0) continue;
    for (std::int64_t terms : {10, 300, 5000})
      CHECK(von_neumann_series_terms(g, terms) == doctest::Approx(plain_series(g, terms)).epsilon(1e-10));
  }
}

TEST_CASE("series and eigenvalue forms agree on small undirected graphs") {
  const std::vector<std::pair<int, int>> p3 = {{0, 1}, {1, 2}};
  const Digraph path = Digraph::undirected(3, p3);
  const double expected = 2.0 - 0.75 * std::log2(3.0);
  CHECK(von_neumann_eigen(path) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(von_neumann_series(path, 1e-6) - expected) < 1e-6);
  const std::vector<std::pair<int, int>> k2 = {{0, 1}};
  CHECK(std::abs(von_neumann_eigen(Digraph::undirected(2, k2))) < 1e-12);
  CHECK(std::abs(von_neumann_series(Digraph::undirected(2, k2), 1e-6)) < 1e-6);
  // TT3 has the real spectrum {0, 1/3, 2/3}.
  const Digraph tt3 = Digraph::from_tournament(transitive(3));
  const double h = std::log2(3.0) / 3 + 2.0 / 3 * std::log2(1.5);
  CHECK(von_neumann_eigen(tt3) == doctest::Approx(h).epsilon(1e-12));
  CHECK(std::abs(von_neumann_series(tt3, 1e-7) - h) < 2e-7);
  CHECK_THROWS_AS(von_neumann_eigen(Digraph::from_tournament(consecutive_rotational(3))), std::domain_error);
}

TEST_CASE("complex eigen form equals the series for tournaments") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : enumerate_tournaments(n)) {
      const Digraph g = Digraph::from_tournament(t);
      CHECK(std::abs(von_neumann_eigen_complex(g) - von_neumann_series(g, 1e-7)) < 1e-6);
    }
}

TEST_CASE("doubling J past the tail bound moves the series by at most 2 epsilon") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const Digraph g = Digraph::from_tournament(oracle::random_tournament(4 + trial % 4, rng));
    const double eps = 1e-4;
    const std::int64_t j = series_length(g.size(), eps);
    CHECK(std::abs(von_neumann_series_terms(g, 2 * j) - von_neumann_series_terms(g, j)) <= 2 * eps);
  }
}

TEST_CASE("walk estimate matches the series at the same length") {
  const Digraph c3 = Digraph::from_tournament(consecutive_rotational(3));
  const double eps = 0.05;
  const WalkEstimate w = von_neumann_walk(c3, WalkConfig{100000, 1 << 20, 99}, eps);
  CHECK(w.length == series_length(3, eps));
  CHECK(std::abs(w.estimate - von_neumann_series(c3, eps)) < 3 * w.standard_error);
  const WalkEstimate a = von_neumann_walk(c3, WalkConfig{1, 100, 5}, eps);
  const WalkEstimate b = von_neumann_walk(c3, WalkConfig{1, 100, 5}, eps);
  CHECK(a.estimate == b.estimate);
  CHECK(a.length == 60);
  CHECK_THROWS_AS(von_neumann_walk(c3, WalkConfig{0, 10, 1}, eps), std::invalid_argument);
}

TEST_CASE("empirical return rates estimate tr(M^j)/n on 4-vertex digraphs") {
  std::mt19937_64 rng(83);
  const std::int64_t trials = 40000;
  for (int trial = 0; trial < 6; ++trial) {
    const Digraph g = oracle::random_digraph(4, 0.5, rng);
    if (g.total_out_degree() == 0) continue;
    const auto rates = empirical_return_rates(g, WalkConfig{trials, 1 << 20, 1000u + trial}, 10);
    const auto m = oracle::markov(oracle::adjacency(g));
    auto p = m;
    for (int j = 1; j <= 10; ++j) {
      double tr = 0.0;
      for (int i = 0; i < 4; ++i) tr += p[i][i];
      // Each rate averages 4 * trials indicators; 5 sigma of a Bernoulli mean.
      CHECK(std::abs(4.0 * rates[j] - tr) <= 4.0 * 5.0 * std::sqrt(0.25 / (4.0 * trials)));
      p = oracle::multiply(p, m);
    }
  }
}

TEST_CASE("entropy bounds") {
  for (int n = 2; n <= 6; ++n) {
    const Digraph tt = Digraph::from_tournament(transitive(n));
    const auto b = entropy_upper_bounds(tt);
    CHECK(b.is_acyclic);
    CHECK(std::abs(von_neumann_series(tt, 1e-11) - b.degree_bound) < 1e-9);
    CHECK(b.log_bound == doctest::Approx(std::log2(static_cast<double>(n))));
  }
  const Digraph c3 = Digraph::from_tournament(consecutive_rotational(3));
  const auto b = entropy_upper_bounds(c3);
  CHECK_FALSE(b.is_acyclic);
  CHECK(von_neumann_series(c3, 1e-9) < b.degree_bound);
}
