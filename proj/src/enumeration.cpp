#include "tourney/enumeration.hpp"

#include "canonical_detail.hpp"
#include "tourney/canonical.hpp"
#include "tourney/io.hpp"
#include "tourney/spectral.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace tourney {

namespace {

constexpr int kGeneralCap = 8;
constexpr int kRegularCap = 11;
constexpr int kRegularLongCap = 13;
constexpr int kSplitLevel = 7;

// Orderly generation: a canonical k-tournament is extended by a new last vertex in
// every admissible way and a child is kept iff it is itself canonical. Every class
// then appears exactly once. lo[k]..hi[k] bound the scores allowed at k vertices;
// the bounds must be isomorphism invariant and survive deleting the last vertex.
class OrderlyGenerator {
 public:
  OrderlyGenerator(int n, std::vector<int> lo, std::vector<int> hi)
      : n_(n), lo_(std::move(lo)), hi_(std::move(hi)) {}

  // Visits canonical tournaments with exactly `level` vertices.
  template <class Visit>
  void run_to_level(int level, Visit&& visit) {
    k_ = 1;
    out_[0] = 0;
    score_[0] = 0;
    if (lo_[1] > 0) return;
    descend(level, visit);
  }

  // Continues from a stored canonical partial tournament.
  template <class Visit>
  void run_from(const Tournament& start, Visit&& visit) {
    k_ = start.size();
    for (int v = 0; v < k_; ++v) {
      out_[v] = start.out_mask(v);
      score_[v] = std::popcount(out_[v]);
    }
    descend(n_, visit);
  }

  Tournament current() const {
    return Tournament::from_out_masks(std::vector<std::uint64_t>(out_.begin(), out_.begin() + k_));
  }

 private:
  template <class Visit>
  void descend(int level, Visit& visit) {
    if (k_ == level) {
      visit(*this);
      return;
    }
    const int k = k_;
    const int lo = lo_[k + 1];
    const int hi = hi_[k + 1];
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    std::uint64_t must_beat_new = 0;  // v -> k forced
    std::uint64_t must_lose_new = 0;  // k -> v forced
    for (int v = 0; v < k; ++v) {
      if (score_[v] + 1 < lo) return;
      if (score_[v] < lo) must_beat_new |= std::uint64_t{1} << v;
      if (score_[v] >= hi) must_lose_new |= std::uint64_t{1} << v;
    }
    if (must_beat_new & must_lose_new) return;
    const std::uint64_t free = all & ~must_beat_new & ~must_lose_new;
    // Enumerate subsets of `free` (including empty and full).
    std::uint64_t sub = 0;
    while (true) {
      const std::uint64_t in = must_beat_new | sub;
      const int new_score = k - std::popcount(in);
      if (new_score >= lo && new_score <= hi) {
        out_[k] = all & ~in;
        score_[k] = new_score;
        for (std::uint64_t m = in; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          out_[v] |= std::uint64_t{1} << k;
          ++score_[v];
        }
        k_ = k + 1;
        if (detail::identity_is_max_code(out_.data(), k + 1)) descend(level, visit);
        k_ = k;
        for (std::uint64_t m = in; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          out_[v] &= ~(std::uint64_t{1} << k);
          --score_[v];
        }
      }
      if (sub == free) break;
      sub = (sub - free) & free;
    }
  }

  int n_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  int k_ = 0;
  std::array<std::uint64_t, Tournament::kMaxVertices> out_{};
  std::array<int, Tournament::kMaxVertices> score_{};
};

void sort_by_canonical_form(std::vector<Tournament>& ts) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) keys.emplace_back(labelled_code(ts[i]), i);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  std::vector<Tournament> sorted;
  sorted.reserve(keys.size());
  for (const auto& [code, i] : keys) sorted.push_back(ts[i]);
  ts = std::move(sorted);
}

std::filesystem::path shard_file(const std::filesystem::path& dir, int n, int shard, int shards) {
  return dir / ("regular-n" + std::to_string(n) + "-shard" + std::to_string(shard) + "-of" +
                std::to_string(shards) + ".txt");
}

std::optional<std::vector<Tournament>> load_shard(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::vector<Tournament> ts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# done", 0) == 0) return ts;
    if (line.empty() || line[0] == '#') continue;
    try {
      ts.push_back(tournament_from_text(line));
    } catch (const std::exception&) {
      return std::nullopt;  // damaged shard
    }
  }
  return std::nullopt;  // incomplete shard
}

void save_shard(const std::filesystem::path& file, const std::vector<Tournament>& ts) {
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    for (const auto& t : ts) out << to_text(t) << '\n';
    out << "# done " << ts.size() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

// Runs orderly generation for n vertices, sharded over the canonical nodes at the split level.
std::vector<Tournament> generate(int n, const std::vector<int>& lo, const std::vector<int>& hi, int shards,
                                 const std::optional<std::filesystem::path>& checkpoint_dir,
                                 const std::function<void(const ShardProgress&)>& on_done) {
  shards = std::max(1, shards);
  const int split = std::min(n, kSplitLevel);
  std::vector<Tournament> roots;
  {
    OrderlyGenerator gen(n, lo, hi);
    gen.run_to_level(split, [&](const OrderlyGenerator& g) { roots.push_back(g.current()); });
  }
  if (split == n) {
    sort_by_canonical_form(roots);
    return roots;
  }

  std::vector<std::vector<Tournament>> results(shards);
  std::vector<char> loaded(shards, 0);
  if (checkpoint_dir) {
    std::filesystem::create_directories(*checkpoint_dir);
    for (int s = 0; s < shards; ++s) {
      if (auto ts = load_shard(shard_file(*checkpoint_dir, n, s, shards))) {
        results[s] = std::move(*ts);
        loaded[s] = 1;
      }
    }
  }

  std::mutex report;
  auto done = [&](int s) {
    if (!on_done) return;
    const std::lock_guard lock(report);
    on_done(ShardProgress{s, shards, results[s].size(), loaded[s] != 0});
  };
  for (int s = 0; s < shards; ++s)
    if (loaded[s]) done(s);

  auto work = [&](int s) {
    if (loaded[s]) return;
    OrderlyGenerator gen(n, lo, hi);
    for (std::size_t r = s; r < roots.size(); r += shards) {
      gen.run_from(roots[r], [&](const OrderlyGenerator& g) { results[s].push_back(g.current()); });
    }
    if (checkpoint_dir) save_shard(shard_file(*checkpoint_dir, n, s, shards), results[s]);
    done(s);
  };

  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < shards; ++s) threads.emplace_back(work, s);
    for (auto& th : threads) th.join();
  }
  std::vector<Tournament> merged;
  for (int s = 0; s < shards; ++s) {
    merged.insert(merged.end(), results[s].begin(), results[s].end());
  }
  sort_by_canonical_form(merged);
  return merged;
}

}  // namespace

std::vector<Tournament> enumerate_tournaments(int n, const EnumerationBudget& budget) {
  if (n < 1) throw TournamentError(TournamentErrorKind::InvalidArgument, "n must be positive");
  if (n > budget.max_n) {
    throw TournamentError(TournamentErrorKind::InvalidArgument,
                          "n=" + std::to_string(n) + " exceeds the enumeration cap " +
                              std::to_string(budget.max_n));
  }
  if (n > kGeneralCap) {
    std::clog << "warning: enumerating all " << n << "-tournaments exceeds the default cap of "
              << kGeneralCap << " and may take very long\n";
  }
  std::vector<int> lo(n + 1, 0), hi(n + 1, 0);
  for (int k = 0; k <= n; ++k) hi[k] = std::max(0, k - 1);
  auto result = generate(n, lo, hi, budget.parallel_shards, std::nullopt, {});
  if (budget.max_count && result.size() > *budget.max_count) result.erase(result.begin() + static_cast<std::ptrdiff_t>(*budget.max_count), result.end());
  return result;
}

std::vector<Tournament> enumerate_regular(int n, const RegularEnumerationOptions& options) {
  if (n % 2 == 0 || n < 1) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "regular tournaments need odd n");
  }
  const int cap = options.allow_long ? kRegularLongCap : kRegularCap;
  if (n > cap) {
    throw TournamentError(TournamentErrorKind::InvalidArgument,
                          "regular enumeration for n=" + std::to_string(n) +
                              (n <= kRegularLongCap ? " requires the long-running option" : " is not supported"));
  }
  const int m = (n - 1) / 2;
  std::vector<int> lo(n + 1, 0), hi(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    lo[k] = std::max(0, m - (n - k));
    hi[k] = std::min(k - 1, m);
  }
  return generate(n, lo, hi, options.parallel_shards, options.checkpoint_dir, options.on_shard_done);
}

void for_each_score_sequence(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1) throw TournamentError(TournamentErrorKind::InvalidArgument, "n must be positive");
  std::vector<int> s(n, 0);
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  // Depth-first over nondecreasing prefixes that satisfy Landau's inequality and can still
  // reach the total sum (every remaining score is at most n-1).
  std::function<void(int, int, std::int64_t)> rec = [&](int k, int min_next, std::int64_t sum) {
    if (k == n) {
      if (sum == total) visit(s);
      return;
    }
    for (int v = min_next; v <= n - 1; ++v) {
      const std::int64_t ns = sum + v;
      const std::int64_t kk = k + 1;
      if (ns < kk * (kk - 1) / 2) continue;
      // Remaining n-k-1 scores are >= v, so the total is at least ns + v*(n-k-1).
      if (ns + static_cast<std::int64_t>(v) * (n - k - 1) > total) break;
      s[k] = v;
      rec(k + 1, v, ns);
    }
  };
  rec(0, 0, 0);
}

std::vector<ScoreSequence> enumerate_score_sequences(int n) {
  std::vector<ScoreSequence> out;
  for_each_score_sequence(n, [&](const std::vector<int>& s) { out.push_back(ScoreSequence{s}); });
  return out;
}

std::int64_t count_score_sequences(int n) {
  std::int64_t c = 0;
  for_each_score_sequence(n, [&](const std::vector<int>&) { ++c; });
  return c;
}

std::int64_t distinct_entropy_value_count(int n, int alpha) {
  if (n < 2 || alpha < 2) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "distinct value count needs n >= 2, alpha >= 2");
  }
  if (alpha == 2 || alpha == 3) {
    // Both power sums are functions of the score sequence.
    std::set<std::int64_t> values;
    const std::int64_t c3n = binomial(n, 3);
    for_each_score_sequence(n, [&](const std::vector<int>& s) {
      std::int64_t v = 0;
      if (alpha == 2) {
        for (int x : s) v += static_cast<std::int64_t>(x) * x;
      } else {
        v = -3 * c3n;
        for (int x : s) v += static_cast<std::int64_t>(x) * x * x + 3 * binomial(x, 2);
      }
      values.insert(v);
    });
    return static_cast<std::int64_t>(values.size());
  }
  if (n > kGeneralCap) {
    throw TournamentError(TournamentErrorKind::InvalidArgument,
                          "alpha >= 4 requires exhaustive enumeration, n <= 8");
  }
  std::set<BigInt> values;
  for (const auto& t : enumerate_tournaments(n)) values.insert(laplacian_power_trace(laplacian(t), alpha));
  return static_cast<std::int64_t>(values.size());
}

std::vector<ConjectureRow> conjecture_table(int n_max, int alpha_max) {
  if (n_max > kGeneralCap || n_max < 2 || alpha_max < 2) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "conjecture table needs 2 <= n_max <= 8, alpha_max >= 2");
  }
  std::vector<ConjectureRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    const auto ts = alpha_max >= 4 ? enumerate_tournaments(n) : std::vector<Tournament>{};
    std::vector<IntMatrix> laps;
    for (const auto& t : ts) laps.push_back(laplacian(t));
    const std::int64_t sn = count_score_sequences(n);
    for (int a = 2; a <= alpha_max; ++a) {
      std::int64_t h = 0;
      if (a <= 3) {
        h = distinct_entropy_value_count(n, a);
      } else {
        std::set<BigInt> values;
        for (const auto& l : laps) values.insert(laplacian_power_trace(l, a));
        h = static_cast<std::int64_t>(values.size());
      }
      rows.push_back(ConjectureRow{n, a, h, sn});
    }
  }
  return rows;
}

std::string conjecture_csv(const std::vector<ConjectureRow>& rows) {
  std::ostringstream os;
  os << "n,alpha,h,S,ratio_exact,ratio\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.alpha << ',' << r.distinct_values << ',' << r.score_sequences << ','
       << r.distinct_values << '/' << r.score_sequences << ',';
    os.precision(6);
    os << std::fixed << static_cast<double>(r.distinct_values) / static_cast<double>(r.score_sequences) << '\n';
    os.unsetf(std::ios::floatfield);
  }
  return os.str();
}

}  // namespace tourney
