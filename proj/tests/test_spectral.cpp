#include "oracles.hpp"

#include "tourney/enumeration.hpp"
#include "tourney/polynomial.hpp"
#include "tourney/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace tourney;

namespace {

// Coefficients of det(xI - L), ascending, from tr(L^k) through Newton's identities.
std::vector<std::int64_t> newton_charpoly(const oracle::Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::int64_t> p(n + 1), e(n + 1);
  for (int k = 1; k <= n; ++k) p[k] = oracle::laplacian_trace(a, k);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t s = 0;
    for (int i = 1; i <= k; ++i) s += (i % 2 ? 1 : -1) * e[k - i] * p[i];
    e[k] = s / k;
  }
  std::vector<std::int64_t> c(n + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = (k % 2 ? -1 : 1) * e[k];
  return c;
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_CASE("Faddeev-LeVerrier agrees with Newton's identities") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    const Digraph g = trial % 2 ? Digraph::from_tournament(oracle::random_tournament(n, rng))
                                : oracle::random_digraph(n, 0.4, rng);
    const CharPoly p = char_poly(laplacian(g));
    const auto ref = newton_charpoly(oracle::adjacency(g));
    REQUIRE(p.coeffs.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(p.coeffs[i] == ref[i]);
  }
}

// Defective eigenvalues limit the dense solver to about sqrt(machine epsilon).
TEST_CASE("roots agree with a dense eigensolver") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_tournaments(n)) {
      const Spectrum s = normalized_spectrum(t);
      REQUIRE(oracle::match_distance(s.eigenvalues, oracle::dense_spectrum(oracle::adjacency(t))) < 1e-6);
    }
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g = oracle::random_digraph(3 + trial % 8, 0.35, rng);
    if (g.total_out_degree() == 0) continue;
    CHECK(oracle::match_distance(normalized_spectrum(g).eigenvalues, oracle::dense_spectrum(oracle::adjacency(g))) <
          1e-6);
  }
}

TEST_CASE("roots are closed under conjugation and sum to 1") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Spectrum s = normalized_spectrum(oracle::random_tournament(3 + trial % 12, rng));
    CHECK(std::abs(s.sum() - std::complex<double>(1.0, 0.0)) < 1e-10);
    for (const auto& z : s.eigenvalues) {
      const auto mirror = std::find(s.eigenvalues.begin(), s.eigenvalues.end(), std::conj(z));
      CHECK(mirror != s.eigenvalues.end());
    }
  }
}

TEST_CASE("doubly regular spectra have exact multiplicities") {
  for (int p : {7, 11, 19, 23}) {
    const Tournament t = quadratic_residue_tournament(p);
    const CharPoly cp = char_poly(laplacian(t));
    const Spectrum s = roots(cp);
    CHECK(relative_residual(cp, s) < 1e-12);
    const Spectrum n = s.scaled(1.0 / static_cast<double>(binomial(p, 2)));
    CHECK(oracle::match_distance(n.eigenvalues, doubly_regular_spectrum(p).eigenvalues) < 1e-12);
  }
  CHECK_THROWS_AS(doubly_regular_spectrum(9), SpectralError);
}

TEST_CASE("square-free decomposition reproduces the polynomial") {
  // (x-1)^3 (x+2)^2 (x^2+1)
  RationalPoly f = {Rational(1)};
  for (int i = 0; i < 3; ++i) f = mul(f, {Rational(-1), Rational(1)});
  for (int i = 0; i < 2; ++i) f = mul(f, {Rational(2), Rational(1)});
  f = mul(f, {Rational(1), Rational(0), Rational(1)});
  const auto parts = squarefree_decomposition(f);
  RationalPoly back = {Rational(1)};
  std::map<int, int> degree_by_mult;
  for (const auto& [factor, m] : parts) {
    degree_by_mult[m] += degree(factor);
    for (int i = 0; i < m; ++i) back = mul(back, factor);
  }
  CHECK(back == f);
  CHECK(degree_by_mult == std::map<int, int>{{1, 2}, {2, 1}, {3, 1}});
}

TEST_CASE("Aberth iteration reports non-convergence") {
  const std::vector<long double> c = {-1, 0, 0, 0, 0, 1};
  CHECK_THROWS_AS(aberth_roots(c, AberthOptions{1, 1e-13L}), SpectralError);
  const auto r = aberth_roots(c);
  for (const auto& z : r) CHECK(std::abs(std::pow(z, 5) - 1.0L) < 1e-12L);
}

TEST_CASE("power_sum_trace matches the integer matrix oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Tournament t = oracle::random_tournament(2 + trial % 10, rng);
    const std::int64_t c = binomial(t.size(), 2);
    for (int k = 1; k <= 6; ++k) {
      Rational ck = 1;
      for (int i = 0; i < k; ++i) ck *= c;
      CHECK(power_sum_trace(t, k) == Rational(oracle::laplacian_trace(oracle::adjacency(t), k)) / ck);
    }
  }
}

TEST_CASE("zero-trace inputs are reported") {
  CHECK_THROWS_AS(normalization_constant(Digraph(4)), SpectralError);
  CHECK_THROWS_AS(normalization_constant(Tournament(1)), SpectralError);
  CHECK_THROWS_AS(normalized_spectrum(Digraph(3)), SpectralError);
  CHECK(normalization_constant(transitive(5)) == Rational(1, 10));
}
