#include "oracles.hpp"

#include "tourney/entropy.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/order.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tourney;

TEST_CASE("power sums equal tr(L^k) for every class up to n = 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_tournaments(n)) {
      const auto a = oracle::adjacency(t);
      const PowerSums p = power_sums(t);
      REQUIRE(p.raw2 == oracle::laplacian_trace(a, 2));
      REQUIRE(p.raw3 == oracle::laplacian_trace(a, 3));
      REQUIRE(p.raw4 == oracle::laplacian_trace(a, 4));
      const std::int64_t c = binomial(n, 2);
      CHECK(p.f4 == Rational(p.raw4, c * c * c * c));
      CHECK((p.raw2 - c) % 2 == 0);
    }
}

TEST_CASE("raw4 stays exact on large random tournaments") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Tournament t = oracle::random_tournament(10 + trial, rng);
    CHECK(power_sums(t).raw4 == oracle::laplacian_trace(oracle::adjacency(t), 4));
  }
}

TEST_CASE("regular closed form for raw4") {
  // raw4 = m^4 n - 12 m c3 + 4 c4 on a regular tournament with score m.
  for (int n : {5, 7, 9, 11})
    for (const auto& t : enumerate_regular(n)) {
      const std::int64_t m = (n - 1) / 2;
      CHECK(power_sums(t).raw4 == m * m * m * m * n - 12 * m * count_3cycles(t) + 4 * count_c4_t4(t).c4);
    }
}

TEST_CASE("transitive raw2 closed form") {
  for (int n = 2; n <= 20; ++n) CHECK(2 * 3 * power_sums(transitive(n)).raw2 == n * (2 * n - 1) * (n - 1));
}

TEST_CASE("named table values") {
  CHECK(power_sums(transitive(4)).raw2 == 14);
  const auto to4 = four_tournament_table()[2];
  CHECK(to4.first == "TO4");
  CHECK(power_sums(to4.second).raw2 == 12);
  CHECK(power_sums(to4.second).raw3 == 27);
  const auto ts4 = four_tournament_table()[0].second;
  CHECK(count_3cycles(ts4) == 2);
  CHECK(hierarchy(ts4) == Rational(1, 5));
  CHECK(*renyi_exact(ts4, 2).value == doctest::Approx(-std::log2(10.0 / 36.0)).epsilon(1e-14));
}

TEST_CASE("undefined values are results, not errors") {
  const Tournament r5 = consecutive_rotational(5);
  const auto h = renyi_exact(r5, 4);
  CHECK_FALSE(h.defined());
  CHECK(h.reason == EntropyStatus::NonpositiveSum);
  CHECK(power_sums(r5).f4 == Rational(-20, 10000));
  CHECK(h_star(r5, 4) == Rational(20, 10000));
  CHECK_FALSE(renyi_numeric(consecutive_rotational(3), 3.0).defined());
  CHECK_FALSE(closed_form_C3(3.0).defined());
  CHECK(renyi_numeric(Tournament(1), 2.0).reason == EntropyStatus::ZeroTrace);
  CHECK_THROWS_AS(renyi_numeric(transitive(3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(renyi_numeric(transitive(3), -0.5), std::invalid_argument);
}

TEST_CASE("numeric and exact routes agree") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Tournament t = oracle::random_tournament(3 + trial % 9, rng);
    for (int a : {2, 3, 4}) {
      const auto e = renyi_exact(t, a);
      const auto x = renyi_numeric(t, a);
      REQUIRE(e.defined() == x.defined());
      if (e.defined()) CHECK(*x.value == doctest::Approx(*e.value).epsilon(1e-9));
    }
  }
  CHECK(*renyi_numeric(transitive(3), 2.0).value == doctest::Approx(std::log2(9.0 / 5.0)).epsilon(1e-13));
}

TEST_CASE("3-cycle closed form follows the spectrum") {
  const Tournament c3 = consecutive_rotational(3);
  for (double a : {0.5, 2.0, 2.5, 2.9, 5.0, 12.0, 24.0, 36.0, 100.0}) {
    const auto x = renyi_numeric(c3, a), y = closed_form_C3(a);
    REQUIRE(x.defined() == y.defined());
    if (x.defined()) CHECK(std::abs(*x.value - *y.value) < 1e-10);
  }
  // Approaching the pole from below the values grow without bound.
  CHECK(*closed_form_C3(2.999).value > *closed_form_C3(2.99).value);
  CHECK(*closed_form_C3(2.99).value > *closed_form_C3(2.9).value);
  for (int k = 1; k <= 10; ++k) {
    const double expected = (12.0 * k * std::log2(std::sqrt(3.0)) - 1.0) / (12.0 * k - 1.0);
    CHECK(*closed_form_C3(12.0 * k).value == doctest::Approx(expected).epsilon(1e-13));
  }
  for (double a : {2.0, 7.5, 50.0}) CHECK(std::abs(*renyi_numeric(transitive(3), a).value - *closed_form_TT3(a).value) < 1e-10);
  CHECK(std::abs(*closed_form_TT3(20000.0).value - (std::log2(3.0) - 1.0)) < 1e-4);
}

TEST_CASE("regularize_step moves score toward the mean") {
  const auto step = regularize_step(transitive(3));
  REQUIRE(step.has_value());
  CHECK(is_regular(*step));
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    Tournament t = trial % 4 == 0 ? transitive(7) : oracle::random_tournament(5 + trial % 8, rng);
    for (auto next = regularize_step(t); next; next = regularize_step(t)) {
      const PowerSums before = power_sums(t), after = power_sums(*next);
      const auto s0 = t.scores(), s1 = next->scores();
      int up = -1, down = -1;
      for (int v = 0; v < t.size(); ++v) {
        if (s1[v] == s0[v] + 1) up = v;
        if (s1[v] == s0[v] - 1) down = v;
      }
      REQUIRE(up >= 0);
      REQUIRE(down >= 0);
      CHECK(before.raw2 - after.raw2 == 2 * (s0[down] - s0[up] - 1));
      CHECK(after.raw2 < before.raw2);
      t = *next;
    }
    const auto s = score_sequence(t).scores;
    CHECK(s.back() - s.front() <= 1);
    if (t.size() % 2) CHECK(is_regular(t));
  }
}

TEST_CASE("transitivize_step adds 2 to raw2 and 6s+3 to raw3") {
  const auto c3 = consecutive_rotational(3);
  const auto t = transitivize_step(c3);
  REQUIRE(t.has_value());
  CHECK(is_transitive(*t));
  CHECK(power_sums(*t).raw3 - power_sums(c3).raw3 == 9);
  CHECK_FALSE(transitivize_step(transitive(6)).has_value());
  Tournament r = consecutive_rotational(5);
  int steps = 0;
  for (auto next = transitivize_step(r); next; next = transitivize_step(r)) {
    const auto s = r.scores();
    int i = 0, j = 0;
    for (i = 0; i < 5; ++i) {
      for (j = i + 1; j < 5 && s[j] != s[i]; ++j) {
      }
      if (j < 5) break;
    }
    CHECK(power_sums(*next).raw2 - power_sums(r).raw2 == 2);
    CHECK(power_sums(*next).raw3 - power_sums(r).raw3 == 6 * s[i] + 3);
    r = *next;
    ++steps;
  }
  CHECK(steps == 5);
  CHECK(is_transitive(r));
}

TEST_CASE("Shannon entropy") {
  CHECK(shannon(std::vector<double>{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
  CHECK(shannon(std::vector<double>{1.0, 0.0, 0.0}) == 0.0);
  CHECK(shannon(std::vector<double>{0.0, 1.0 / 3, 2.0 / 3}) == doctest::Approx(std::log2(3.0) - 2.0 / 3).epsilon(1e-14));
  CHECK_THROWS_AS(shannon(std::vector<double>{0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(shannon(std::vector<double>{1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("H2 order equals the Landau hierarchy order") {
  for (int n = 3; n <= 7; ++n) {
    const auto ts = enumerate_tournaments(n);
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); ++j) {
        const auto fi = power_sums(ts[i]).f2, fj = power_sums(ts[j]).f2;
        CHECK((fi < fj) == (hierarchy(ts[i]) < hierarchy(ts[j])));
      }
  }
}

TEST_CASE("H*4 strictly decreases in t4 among regular tournaments") {
  for (int n : {7, 9, 11}) {
    const auto rs = enumerate_regular(n);
    for (std::size_t i = 0; i < rs.size(); i += 7)
      for (std::size_t j = 0; j < rs.size(); j += 11) {
        const auto ti = count_c4_t4(rs[i]).t4, tj = count_c4_t4(rs[j]).t4;
        if (ti < tj) CHECK(h_star(rs[i], 4) > h_star(rs[j], 4));
        if (ti == tj) CHECK(h_star(rs[i], 4) == h_star(rs[j], 4));
      }
  }
}
