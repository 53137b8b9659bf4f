#include "tourney/spectral.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>

namespace tourney {

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix laplacian(const Tournament& t) { return laplacian(Digraph::from_tournament(t)); }

IntMatrix laplacian(const Digraph& g) {
  IntMatrix l(g.size());
  for (int i = 0; i < g.size(); ++i) {
    l(i, i) = g.out_degree(i);
    for (int j = 0; j < g.size(); ++j)
      if (g.has_arc(i, j)) l(i, j) = -1;
  }
  return l;
}

Rational normalization_constant(const Tournament& t) {
  // tr(L) of an n-tournament is C(n,2).
  if (t.size() < 2) throw SpectralError("entropy undefined: Laplacian has zero trace");
  return Rational(1, binomial(t.size(), 2));
}

Rational normalization_constant(const Digraph& g) {
  if (g.total_out_degree() == 0) throw SpectralError("entropy undefined: Laplacian has zero trace");
  return Rational(1, g.total_out_degree());
}

std::complex<long double> CharPoly::operator()(std::complex<long double> x) const {
  std::complex<long double> acc(0.0L, 0.0L);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

double CharPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c.convert_to<double>()));
  return m;
}

CharPoly char_poly(const IntMatrix& m) {
  const int n = m.n;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k,  M_0 = 0, c_n = 1.
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<BigInt> mk(static_cast<std::size_t>(n) * n, 0);
  std::vector<BigInt> next(mk.size(), 0);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
          const std::int64_t x = m(i, l);
          if (x != 0) s += x * mk[static_cast<std::size_t>(l) * n + j];
        }
        if (i == j) s += c[n - k + 1];
        next[static_cast<std::size_t>(i) * n + j] = s;
      }
    mk.swap(next);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const std::int64_t x = m(i, l);
        if (x != 0) tr += x * mk[static_cast<std::size_t>(l) * n + i];
      }
    c[n - k] = -tr / k;
  }
  return CharPoly{std::move(c)};
}

std::complex<double> Spectrum::sum() const {
  std::complex<double> s(0.0, 0.0);
  for (const auto& z : eigenvalues) s += z;
  return s;
}

std::complex<double> Spectrum::power_sum(double k) const {
  std::complex<double> s(0.0, 0.0);
  for (const auto& z : eigenvalues) {
    if (z == std::complex<double>(0.0, 0.0)) continue;
    const double r = std::abs(z);
    const double theta = std::arg(z);
    s += std::polar(std::pow(r, k), theta * k);
  }
  return s;
}

Spectrum Spectrum::scaled(double factor) const {
  Spectrum s = *this;
  for (auto& z : s.eigenvalues) z *= factor;
  return s;
}

bool Spectrum::is_real(double tol) const {
  return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                     [tol](const auto& z) { return std::abs(z.imag()) <= tol; });
}

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

struct PolishedRoot {
  Complex50 z;
  // Radius of a disc around z that holds a root.
  Float50 radius;
};

// Newton steps in 50-digit arithmetic from an Aberth estimate. A simple root is reached
// quadratically, so a few steps take the estimate far below double precision.
PolishedRoot polish(const std::vector<Float50>& c, std::complex<long double> start) {
  const int deg = static_cast<int>(c.size()) - 1;
  Complex50 z(Float50(start.real()), Float50(start.imag()));
  Complex50 p, dp;
  auto eval = [&] {
    p = Complex50(0);
    dp = Complex50(0);
    for (int i = deg; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + c[i];
    }
  };
  const Float50 tiny("1e-45");
  for (int iter = 0; iter < 30; ++iter) {
    eval();
    if (abs(dp) == 0) break;
    const Complex50 step = p / dp;
    z -= step;
    if (abs(step) <= tiny * (1 + abs(z))) break;
  }
  eval();
  const Float50 radius = abs(dp) == 0 ? Float50(1) : Float50(deg * abs(p) / abs(dp));
  return {z, radius};
}

// Makes the roots of a real polynomial closed under conjugation: roots whose inclusion
// disc meets the real axis become real and the others are matched with their nearest
// mirror partner.
std::vector<std::complex<long double>> pair_conjugates(const std::vector<PolishedRoot>& z) {
  using C = std::complex<long double>;
  const std::size_t d = z.size();
  std::vector<C> out;
  std::vector<char> used(d, 0);
  const Float50 floor("1e-30");
  std::vector<C> w;
  for (const auto& r : z) w.emplace_back(r.z.real().convert_to<long double>(), r.z.imag().convert_to<long double>());
  // Strongest imaginary parts first, so near-real leftovers end up real.
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(w[a].imag()) > std::abs(w[b].imag()); });
  for (std::size_t i : order) {
    if (used[i]) continue;
    used[i] = 1;
    if (abs(z[i].z.imag()) <= std::max(floor * (1 + abs(z[i].z)), z[i].radius)) {
      out.emplace_back(w[i].real(), 0.0L);
      continue;
    }
    std::size_t best = d;
    long double best_dist = 0.0L;
    for (std::size_t j = 0; j < d; ++j) {
      if (used[j]) continue;
      const long double dist = std::abs(w[j] - std::conj(w[i]));
      if (best == d || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == d) throw SpectralError("unpaired complex root of a real polynomial");
    used[best] = 1;
    const C avg = (w[i] + std::conj(w[best])) / 2.0L;
    out.push_back(avg);
    out.push_back(std::conj(avg));
  }
  return out;
}

}  // namespace

Spectrum roots(const CharPoly& p, double tol) {
  if (p.degree() < 1) throw SpectralError("roots need degree >= 1");
  Spectrum s;
  s.residual_tol = tol;
  std::size_t zeros = 0;
  while (zeros < p.coeffs.size() && p.coeffs[zeros] == 0) ++zeros;
  for (std::size_t i = 0; i < zeros; ++i) s.eigenvalues.emplace_back(0.0, 0.0);
  RationalPoly rest;
  for (std::size_t i = zeros; i < p.coeffs.size(); ++i) rest.emplace_back(p.coeffs[i]);
  if (degree(rest) >= 1) {
    for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
      std::vector<long double> c;
      std::vector<Float50> c50;
      for (const auto& q : factor) {
        c.push_back(q.convert_to<long double>());
        c50.push_back(q.convert_to<Float50>());
      }
      std::vector<PolishedRoot> polished;
      for (const auto& x : aberth_roots(c)) polished.push_back(polish(c50, x));
      auto z = pair_conjugates(polished);
      for (const auto& x : z)
        for (int k = 0; k < mult; ++k)
          s.eigenvalues.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return s;
}

double relative_residual(const CharPoly& p, const Spectrum& s) {
  const double scale = p.max_abs_coeff();
  double worst = 0.0;
  for (const auto& z : s.eigenvalues) {
    const std::complex<long double> x(z.real(), z.imag());
    const double r = static_cast<double>(std::abs(p(x)));
    const double denom = scale * std::pow(std::max(1.0, std::abs(z)), p.degree());
    worst = std::max(worst, r / denom);
  }
  return worst;
}

Spectrum normalized_spectrum(const Tournament& t, double tol) {
  return normalized_spectrum(Digraph::from_tournament(t), tol);
}

Spectrum normalized_spectrum(const Digraph& g, double tol) {
  if (g.total_out_degree() == 0) throw SpectralError("entropy undefined: Laplacian has zero trace");
  return roots(char_poly(laplacian(g)), tol).scaled(1.0 / static_cast<double>(g.total_out_degree()));
}

Spectrum doubly_regular_spectrum(int n) {
  if (n < 3 || n % 4 != 3) throw SpectralError("doubly regular tournaments need n = 3 mod 4");
  const int m = (n - 1) / 2;
  Spectrum s;
  s.eigenvalues.emplace_back(0.0, 0.0);
  const double re = 1.0 / (n - 1);
  const double im = 1.0 / ((n - 1) * std::sqrt(static_cast<double>(n)));
  for (int k = 0; k < m; ++k) s.eigenvalues.emplace_back(re, -im);
  for (int k = 0; k < m; ++k) s.eigenvalues.emplace_back(re, im);
  return s;
}

BigInt laplacian_power_trace(const IntMatrix& lap, int k) {
  if (k < 1) throw SpectralError("power must be >= 1");
  const int n = lap.n;
  std::vector<BigInt> p(lap.a.begin(), lap.a.end());
  std::vector<BigInt> next(p.size());
  for (int step = 1; step < k; ++step) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
          const std::int64_t x = lap(l, j);
          if (x != 0) s += p[static_cast<std::size_t>(i) * n + l] * x;
        }
        next[static_cast<std::size_t>(i) * n + j] = s;
      }
    p.swap(next);
  }
  BigInt tr = 0;
  for (int i = 0; i < n; ++i) tr += p[static_cast<std::size_t>(i) * n + i];
  return tr;
}

Rational power_sum_trace(const Tournament& t, int k) { return power_sum_trace(Digraph::from_tournament(t), k); }

Rational power_sum_trace(const Digraph& g, int k) {
  const Rational c = normalization_constant(g);
  const IntMatrix l = laplacian(g);
  Rational ck = 1;
  for (int i = 0; i < k; ++i) ck *= c;
  return Rational(laplacian_power_trace(l, k)) * ck;
}

}  // namespace tourney
