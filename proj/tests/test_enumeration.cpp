#include "oracles.hpp"

#include "tourney/canonical.hpp"
#include "tourney/enumeration.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace tourney;

TEST_CASE("class counts for n <= 8") {
  const std::size_t expected[] = {1, 1, 2, 4, 12, 56, 456, 6880};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_tournaments(n).size() == expected[n - 1]);
}

TEST_CASE("enumeration agrees with brute-force class representatives for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> brute;
    for (const auto& t : oracle::all_labelled(n)) brute.insert(canonical_form(t));
    std::set<std::string> got;
    for (const auto& t : enumerate_tournaments(n)) {
      CHECK(is_canonical(t));
      got.insert(canonical_form(t));
    }
    CHECK(got == brute);
  }
}

TEST_CASE("output is sorted by canonical form and free of duplicates") {
  const auto ts = enumerate_tournaments(7);
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(canonical_form(ts[i - 1]) < canonical_form(ts[i]));
}

TEST_CASE("sharded enumeration gives the same result as a single shard") {
  EnumerationBudget b;
  b.parallel_shards = 3;
  const auto sharded = enumerate_tournaments(8, b);
  const auto single = enumerate_tournaments(8);
  REQUIRE(sharded.size() == single.size());
  for (std::size_t i = 0; i < single.size(); ++i) CHECK(sharded[i] == single[i]);
}

TEST_CASE("budget limits") {
  CHECK_THROWS_AS(enumerate_tournaments(9), TournamentError);
  EnumerationBudget b;
  b.max_count = 5;
  CHECK(enumerate_tournaments(6, b).size() == 5);
}

TEST_CASE("regular classes: counts and brute-force check for n = 5, 7") {
  CHECK(enumerate_regular(3).size() == 1);
  CHECK(enumerate_regular(5).size() == 1);
  CHECK(enumerate_regular(7).size() == 3);
  CHECK(enumerate_regular(9).size() == 15);
  std::set<std::string> brute;
  for (const auto& t : oracle::all_labelled(7))
    if (is_regular(t)) brute.insert(canonical_form(t));
  std::set<std::string> got;
  for (const auto& t : enumerate_regular(7)) {
    CHECK(is_regular(t));
    got.insert(canonical_form(t));
  }
  CHECK(got == brute);
}

TEST_CASE("regular enumeration guards") {
  CHECK_THROWS_AS(enumerate_regular(8), TournamentError);
  CHECK_THROWS_AS(enumerate_regular(13), TournamentError);
  CHECK_THROWS_AS(enumerate_regular(15, RegularEnumerationOptions{true, 1, std::nullopt, {}}), TournamentError);
}

TEST_CASE("checkpointed regular enumeration resumes from shard files") {
  const auto dir = std::filesystem::temp_directory_path() / "tourney_ckpt_test";
  std::filesystem::remove_all(dir);
  RegularEnumerationOptions opt;
  opt.parallel_shards = 4;
  opt.checkpoint_dir = dir;
  std::vector<ShardProgress> first;
  opt.on_shard_done = [&](const ShardProgress& p) { first.push_back(p); };
  const auto a = enumerate_regular(9, opt);
  CHECK(a.size() == 15);
  CHECK(first.size() == 4);
  for (const auto& p : first) CHECK_FALSE(p.from_checkpoint);
  std::vector<ShardProgress> second;
  opt.on_shard_done = [&](const ShardProgress& p) { second.push_back(p); };
  const auto b = enumerate_regular(9, opt);
  CHECK(b == a);
  for (const auto& p : second) CHECK(p.from_checkpoint);
  // An incomplete shard file is recomputed.
  { std::ofstream f(dir / "regular-n9-shard0-of4.txt"); f << "n=9 bits=0\n"; }
  second.clear();
  CHECK(enumerate_regular(9, opt) == a);
  std::size_t recomputed = 0;
  for (const auto& p : second) recomputed += !p.from_checkpoint;
  CHECK(recomputed == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("score sequences: counts and agreement with realised sequences") {
  const std::int64_t expected[] = {1, 1, 2, 4, 9, 22, 59, 167, 490, 1486};
  for (int n = 1; n <= 10; ++n) CHECK(count_score_sequences(n) == expected[n - 1]);
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> realised;
    for (const auto& t : oracle::all_labelled(n)) realised.insert(oracle::sorted_scores(t));
    std::set<std::vector<int>> listed;
    for (const auto& s : enumerate_score_sequences(n)) listed.insert(s.scores);
    CHECK(listed == realised);
  }
  const auto seqs = enumerate_score_sequences(7);
  CHECK(std::is_sorted(seqs.begin(), seqs.end()));
}

TEST_CASE("distinct power-sum counts") {
  const std::int64_t h2[] = {1, 2, 3, 6, 9, 15, 21, 31, 41};
  for (int n = 2; n <= 10; ++n) CHECK(distinct_entropy_value_count(n, 2) == h2[n - 2]);
  // alpha = 3: direct count over all classes.
  for (int n = 2; n <= 7; ++n) {
    std::set<std::int64_t> values;
    for (const auto& t : enumerate_tournaments(n)) values.insert(oracle::laplacian_trace(oracle::adjacency(t), 3));
    CHECK(distinct_entropy_value_count(n, 3) == static_cast<std::int64_t>(values.size()));
  }
  std::set<std::int64_t> four;
  for (const auto& t : enumerate_tournaments(5)) four.insert(oracle::laplacian_trace(oracle::adjacency(t), 4));
  CHECK(distinct_entropy_value_count(5, 4) == static_cast<std::int64_t>(four.size()));
  CHECK(four.size() == 11);
}

TEST_CASE("conjecture table rows are consistent") {
  const auto rows = conjecture_table(6, 4);
  for (const auto& r : rows) {
    CHECK(r.score_sequences == count_score_sequences(r.n));
    CHECK(r.distinct_values == distinct_entropy_value_count(r.n, r.alpha));
    CHECK(r.distinct_values <= static_cast<std::int64_t>(enumerate_tournaments(r.n).size()));
  }
  const std::string csv = conjecture_csv(rows);
  CHECK(csv.rfind("n,alpha,h,S,ratio_exact,ratio\n", 0) == 0);
  CHECK(csv.find("5,2,6,9,6/9,") != std::string::npos);
}
