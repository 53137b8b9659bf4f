#include "tourney/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tourney {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  const int db = degree(b);
  if (db < 0) throw SpectralError("polynomial division by zero");
  RationalPoly r = a;
  trim(r);
  RationalPoly q(std::max<int>(0, degree(r) - db + 1), Rational(0));
  while (degree(r) >= db) {
    const int dr = degree(r);
    const Rational c = r[dr] / b[db];
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

namespace {

RationalPoly monic(RationalPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

}  // namespace

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f_in) {
  RationalPoly f = monic(f_in);
  std::vector<std::pair<RationalPoly, int>> out;
  if (degree(f) < 1) return out;
  const RationalPoly fp = derivative(f);
  RationalPoly a = gcd(f, fp);
  RationalPoly b = divmod(f, a).first;
  RationalPoly c = divmod(fp, a).first;
  RationalPoly d = c;
  {
    const RationalPoly bp = derivative(b);
    d.resize(std::max(d.size(), bp.size()), Rational(0));
    for (std::size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    trim(d);
  }
  int mult = 1;
  while (degree(b) >= 1) {
    RationalPoly g = gcd(b, d);
    if (degree(g) >= 1) out.emplace_back(g, mult);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    const RationalPoly bp = derivative(b);
    d = c;
    d.resize(std::max(d.size(), bp.size()), Rational(0));
    for (std::size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    trim(d);
    ++mult;
  }
  return out;
}

std::vector<std::complex<long double>> aberth_roots(std::span<const long double> coeffs,
                                                    const AberthOptions& options) {
  using C = std::complex<long double>;
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[deg] == 0.0L) --deg;
  if (deg < 1) throw SpectralError("root finding needs a polynomial of degree >= 1");
  std::vector<long double> a(coeffs.begin(), coeffs.begin() + deg + 1);
  const long double lead = a[deg];
  for (auto& x : a) x /= lead;
  if (deg == 1) return {C(-a[0], 0.0L)};

  // Start on a circle around the centroid whose radius bounds the root moduli.
  const long double centre = -a[deg - 1] / deg;
  long double radius = 0.0L;
  for (int i = 0; i < deg; ++i) {
    if (a[i] != 0.0L) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0L / (deg - i)));
  }
  radius = std::max(radius, 1e-3L);
  std::vector<C> z(deg);
  for (int k = 0; k < deg; ++k) {
    const long double theta = 2.0L * std::numbers::pi_v<long double> * k / deg + 0.4L;
    z[k] = C(centre, 0.0L) + radius * C(std::cos(theta), std::sin(theta));
  }

  // p, p' and a bound on the rounding error of p at x.
  auto eval = [&](C x, C& p, C& dp, long double& err) {
    p = C(1.0L, 0.0L);
    dp = C(0.0L, 0.0L);
    err = 1.0L;
    const long double r = std::abs(x);
    for (int i = deg - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + a[i];
      err = err * r + std::abs(a[i]);
    }
    err *= 4.0L * (deg + 1) * std::numeric_limits<long double>::epsilon();
  };

  std::vector<char> done(deg, 0);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < deg; ++k) {
      if (done[k]) continue;
      C p, dp;
      long double err;
      eval(z[k], p, dp, err);
      if (std::abs(p) <= err) {
        done[k] = 1;
        continue;
      }
      const C ratio = p / dp;
      C repulsion(0.0L, 0.0L);
      for (int j = 0; j < deg; ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      const C step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) >= options.step_tol * (1.0L + std::abs(z[k])))
        converged = false;
      else
        done[k] = 1;
    }
    if (converged) return z;
  }
  std::ostringstream msg;
  msg << "Aberth iteration did not converge in " << options.max_iterations << " iterations (degree " << deg
      << "); current estimates:";
  for (const auto& x : z) msg << ' ' << static_cast<double>(x.real()) << (x.imag() < 0 ? "" : "+")
                              << static_cast<double>(x.imag()) << 'i';
  throw SpectralError(msg.str());
}

}  // namespace tourney
