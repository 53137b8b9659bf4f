#pragma once

#include "tourney/tournament.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tourney {

struct EnumerationBudget {
  /// Largest n accepted. Raising it above the default prints a warning.
  int max_n = 8;
  /// Truncate the (sorted) result to this many tournaments.
  std::optional<std::size_t> max_count;
  /// Independent shards, each run on its own thread.
  int parallel_shards = 1;
};

struct ShardProgress {
  int shard = 0;
  int shards = 0;
  std::size_t found = 0;
  bool from_checkpoint = false;
};

struct RegularEnumerationOptions {
  /// Needed for n = 13.
  bool allow_long = false;
  int parallel_shards = 1;
  /// When set, finished shards are written here and reloaded on the next run.
  std::optional<std::filesystem::path> checkpoint_dir;
  std::function<void(const ShardProgress&)> on_shard_done;
};

/// One canonical representative per isomorphism class, ordered by canonical_form.
std::vector<Tournament> enumerate_tournaments(int n, const EnumerationBudget& budget = {});

/// Regular tournaments on odd n, one canonical representative per class.
std::vector<Tournament> enumerate_regular(int n, const RegularEnumerationOptions& options = {});

/// Landau-valid nondecreasing score sequences in lexicographic order.
std::vector<ScoreSequence> enumerate_score_sequences(int n);
void for_each_score_sequence(int n, const std::function<void(const std::vector<int>&)>& visit);
std::int64_t count_score_sequences(int n);

/// Number of distinct exact power sums f_alpha over all n-tournaments.
/// alpha = 2 and 3 use score sequences (any n); larger alpha enumerates 2 <= n <= 8.
std::int64_t distinct_entropy_value_count(int n, int alpha);

struct ConjectureRow {
  int n = 0;
  int alpha = 0;
  std::int64_t distinct_values = 0;
  std::int64_t score_sequences = 0;
};

std::vector<ConjectureRow> conjecture_table(int n_max, int alpha_max);
/// Header plus one row per (n, alpha): n,alpha,h,S,ratio_num/ratio_den,ratio.
std::string conjecture_csv(const std::vector<ConjectureRow>& rows);

}  // namespace tourney
