#include "tourney/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace tourney {

namespace {

void check_size(int n) {
  if (n < 1 || n > Tournament::kMaxVertices) {
    throw TournamentError(TournamentErrorKind::InvalidArgument,
                          "vertex count must be in [1, 64], got " + std::to_string(n));
  }
}

std::uint64_t all_vertices(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Tournament::Tournament(int n) : n_(n) {
  check_size(n);
  out_.assign(n, 0);
  for (int i = 0; i < n; ++i) out_[i] = all_vertices(n) & ~all_vertices(i + 1);
}

Tournament Tournament::from_arcs(int n, std::span<const Arc> arcs) {
  check_size(n);
  std::vector<std::uint64_t> out(n, 0);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw TournamentError(TournamentErrorKind::VertexOutOfRange,
                            "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                ") out of range");
    }
    if (a.tail == a.head) {
      throw TournamentError(TournamentErrorKind::Loop, "loop at vertex " + std::to_string(a.tail));
    }
    const std::uint64_t tb = std::uint64_t{1} << a.tail;
    const std::uint64_t hb = std::uint64_t{1} << a.head;
    if ((out[a.tail] & hb) || (out[a.head] & tb)) {
      throw TournamentError(TournamentErrorKind::DuplicatePair,
                            "pair {" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                "} given twice");
    }
    out[a.tail] |= hb;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!((out[i] >> j) & 1U) && !((out[j] >> i) & 1U)) {
        throw TournamentError(TournamentErrorKind::MissingPair,
                              "pair {" + std::to_string(i) + "," + std::to_string(j) + "} missing");
      }
    }
  }
  return Tournament(n, std::move(out));
}

Tournament Tournament::from_out_masks(std::vector<std::uint64_t> out) {
  const int n = static_cast<int>(out.size());
  check_size(n);
  const std::uint64_t all = all_vertices(n);
  for (int i = 0; i < n; ++i) {
    if (out[i] & ~all) {
      throw TournamentError(TournamentErrorKind::VertexOutOfRange, "out-mask has bits beyond n");
    }
    if ((out[i] >> i) & 1U) {
      throw TournamentError(TournamentErrorKind::Loop, "loop at vertex " + std::to_string(i));
    }
    for (int j = i + 1; j < n; ++j) {
      const bool ij = (out[i] >> j) & 1U;
      const bool ji = (out[j] >> i) & 1U;
      if (ij && ji) throw TournamentError(TournamentErrorKind::DuplicatePair, "both directions present");
      if (!ij && !ji) throw TournamentError(TournamentErrorKind::MissingPair, "pair missing");
    }
  }
  return Tournament(n, std::move(out));
}

std::uint64_t Tournament::in_mask(int v) const noexcept {
  return all_vertices(n_) & ~out_[v] & ~(std::uint64_t{1} << v);
}

int Tournament::score(int v) const noexcept { return std::popcount(out_[v]); }

std::vector<int> Tournament::scores() const {
  std::vector<int> s(n_);
  for (int v = 0; v < n_; ++v) s[v] = score(v);
  return s;
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> result;
  result.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) result.push_back(beats(i, j) ? Arc{i, j} : Arc{j, i});
  return result;
}

Tournament Tournament::with_arc_reversed(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw TournamentError(TournamentErrorKind::VertexOutOfRange, "bad arc to reverse");
  }
  auto out = out_;
  out[u] ^= std::uint64_t{1} << v;
  out[v] ^= std::uint64_t{1} << u;
  return Tournament(n_, std::move(out));
}

Tournament Tournament::relabeled(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != n_) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "relabeling must list every vertex");
  }
  std::uint64_t seen = 0;
  for (int v : order) {
    if (v < 0 || v >= n_) throw TournamentError(TournamentErrorKind::VertexOutOfRange, "bad vertex");
    seen |= std::uint64_t{1} << v;
  }
  if (seen != all_vertices(n_)) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "relabeling is not a permutation");
  }
  std::vector<std::uint64_t> out(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (beats(order[i], order[j])) out[i] |= std::uint64_t{1} << j;
  return Tournament(n_, std::move(out));
}

Tournament Tournament::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  if (k < 1) throw TournamentError(TournamentErrorKind::InvalidArgument, "empty vertex subset");
  std::uint64_t seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= n_) {
      throw TournamentError(TournamentErrorKind::VertexOutOfRange,
                            "vertex " + std::to_string(v) + " out of range");
    }
    if ((seen >> v) & 1U) throw TournamentError(TournamentErrorKind::InvalidArgument, "repeated vertex");
    seen |= std::uint64_t{1} << v;
  }
  std::vector<std::uint64_t> out(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && beats(vertices[i], vertices[j])) out[i] |= std::uint64_t{1} << j;
  return Tournament(k, std::move(out));
}

Tournament Tournament::reversed() const {
  std::vector<std::uint64_t> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = in_mask(v);
  return Tournament(n_, std::move(out));
}

bool satisfies_landau(std::span<const int> s) {
  const auto n = static_cast<std::int64_t>(s.size());
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (s[k - 1] < 0) return false;
    if (k > 1 && s[k - 1] < s[k - 2]) return false;
    sum += s[k - 1];
    if (sum < k * (k - 1) / 2) return false;
  }
  return sum == n * (n - 1) / 2;
}

void RotationalSymbol::validate() const {
  if (n < 1 || n % 2 == 0 || n > Tournament::kMaxVertices) {
    throw TournamentError(TournamentErrorKind::InvalidArgument,
                          "rotational symbol needs odd n in [1, 63]");
  }
  std::set<int> m(members.begin(), members.end());
  if (m.size() != members.size() || static_cast<int>(m.size()) != (n - 1) / 2) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "symbol must have (n-1)/2 distinct members");
  }
  for (int d = 1; d < n; ++d) {
    if (m.count(d) + m.count(n - d) != 1) {
      throw TournamentError(TournamentErrorKind::InvalidArgument,
                            "exactly one of " + std::to_string(d) + " and " + std::to_string(n - d) +
                                " must be in the symbol");
    }
  }
}

Tournament transitive(int n) {
  check_size(n);
  std::vector<std::uint64_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = all_vertices(i);
  return Tournament::from_out_masks(std::move(out));
}

Tournament rotational(const RotationalSymbol& symbol) {
  symbol.validate();
  const int n = symbol.n;
  std::vector<std::uint64_t> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int d : symbol.members) out[i] |= std::uint64_t{1} << ((i + d) % n);
  return Tournament::from_out_masks(std::move(out));
}

Tournament consecutive_rotational(int n) {
  if (n < 3 || n % 2 == 0) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "consecutive rotational needs odd n >= 3");
  }
  RotationalSymbol s{n, {}};
  for (int d = 1; d <= (n - 1) / 2; ++d) s.members.push_back(d);
  return rotational(s);
}

Tournament quadratic_residue_tournament(int p) {
  if (!is_prime(p) || p % 4 != 3) {
    throw TournamentError(TournamentErrorKind::InvalidArgument,
                          "quadratic residue tournament needs a prime p = 3 mod 4");
  }
  std::set<int> residues;
  for (int x = 1; x < p; ++x) residues.insert(static_cast<int>(static_cast<std::int64_t>(x) * x % p));
  return rotational(RotationalSymbol{p, std::vector<int>(residues.begin(), residues.end())});
}

ScoreSequence score_sequence(const Tournament& t) {
  ScoreSequence s{t.scores()};
  std::sort(s.scores.begin(), s.scores.end());
  return s;
}

bool is_regular(const Tournament& t) {
  const int n = t.size();
  if (n % 2 == 0) return false;
  for (int v = 0; v < n; ++v)
    if (t.score(v) != (n - 1) / 2) return false;
  return true;
}

bool is_nearly_regular(const Tournament& t) {
  const int n = t.size();
  if (n % 2 != 0) return false;
  int low = 0;
  for (int v = 0; v < n; ++v) {
    const int s = t.score(v);
    if (s == n / 2 - 1) {
      ++low;
    } else if (s != n / 2) {
      return false;
    }
  }
  return low == n / 2;
}

bool is_transitive(const Tournament& t) { return count_3cycles(t) == 0; }

namespace {

// True when the tournament is regular and every pair of out-sets meets in lo..hi vertices.
bool pair_intersections_within(const Tournament& t, int lo, int hi) {
  const int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int c = std::popcount(t.out_mask(x) & t.out_mask(y));
      if (c < lo || c > hi) return false;
    }
  return true;
}

}  // namespace

bool is_doubly_regular(const Tournament& t) {
  const int n = t.size();
  if (n % 4 != 3 || !is_regular(t)) return false;
  const int k = (n - 3) / 4;
  return pair_intersections_within(t, k, k);
}

bool is_quasi_doubly_regular(const Tournament& t) {
  const int n = t.size();
  if (n % 4 != 1 || !is_regular(t)) return false;
  const int k = (n - 1) / 4;
  return pair_intersections_within(t, k - 1, k);
}

std::int64_t count_3cycles(const Tournament& t) {
  const int n = t.size();
  std::int64_t c = binomial(n, 3);
  for (int v = 0; v < n; ++v) c -= binomial(t.score(v), 2);
  return c;
}

FourCounts count_c4_t4(const Tournament& t) {
  const int n = t.size();
  if (n < 4) throw TournamentError(TournamentErrorKind::InvalidArgument, "4-subtournament counts need n >= 4");
  FourCounts fc;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::uint64_t sub = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                    (std::uint64_t{1} << c) | (std::uint64_t{1} << d);
          int s[4] = {std::popcount(t.out_mask(a) & sub), std::popcount(t.out_mask(b) & sub),
                      std::popcount(t.out_mask(c) & sub), std::popcount(t.out_mask(d) & sub)};
          std::sort(s, s + 4);
          if (s[0] == 0) {
            if (s[1] == 1) {
              ++fc.t4;
            } else {
              ++fc.tk4;
            }
          } else if (s[3] == 3) {
            ++fc.to4;
          } else {
            ++fc.c4;
          }
        }
  return fc;
}

Rational hierarchy(const Tournament& t) {
  const std::int64_t n = t.size();
  if (n < 2) throw TournamentError(TournamentErrorKind::InvalidArgument, "hierarchy needs n >= 2");
  // sum (s - (n-1)/2)^2 = sum (2s - (n-1))^2 / 4
  BigInt acc = 0;
  for (int v = 0; v < n; ++v) {
    const std::int64_t d = 2 * t.score(v) - (n - 1);
    acc += d * d;
  }
  return Rational(BigInt(12) * acc, BigInt(4) * (n * n * n - n));
}

}  // namespace tourney
