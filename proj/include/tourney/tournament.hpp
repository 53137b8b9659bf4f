#pragma once

#include "tourney/numeric.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

/// A directed pair (tail, head).
struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class TournamentErrorKind { DuplicatePair, MissingPair, Loop, VertexOutOfRange, InvalidArgument };

class TournamentError : public std::invalid_argument {
 public:
  TournamentError(TournamentErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  TournamentErrorKind kind() const noexcept { return kind_; }

 private:
  TournamentErrorKind kind_;
};

/**
 * An orientation of the complete graph on vertices 0..n-1.
 *
 * Stored as one out-neighbour bitmask per vertex, so n is limited to 64.
 * Values are immutable once built; every mutating operation returns a copy.
 */
class Tournament {
 public:
  static constexpr int kMaxVertices = 64;

  /// Transitive-by-index orientation: i -> j whenever i < j.
  explicit Tournament(int n);

  static Tournament from_arcs(int n, std::span<const Arc> arcs);
  static Tournament from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }
  /// Rows must describe a tournament: out[i] bit j set iff i -> j, exactly one direction per pair.
  static Tournament from_out_masks(std::vector<std::uint64_t> out);

  int size() const noexcept { return n_; }
  bool beats(int u, int v) const noexcept { return (out_[u] >> v) & 1U; }
  std::uint64_t out_mask(int v) const noexcept { return out_[v]; }
  std::uint64_t in_mask(int v) const noexcept;
  int score(int v) const noexcept;
  /// Out-degrees in vertex order (not sorted).
  std::vector<int> scores() const;
  std::vector<Arc> arcs() const;

  Tournament with_arc_reversed(int u, int v) const;
  /// Vertex i of the result is vertex order[i] of this tournament.
  Tournament relabeled(std::span<const int> order) const;
  Tournament induced(std::span<const int> vertices) const;
  Tournament reversed() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Tournament(int n, std::vector<std::uint64_t> out) : n_(n), out_(std::move(out)) {}

  int n_ = 0;
  std::vector<std::uint64_t> out_;
};

/// Nondecreasing list of scores.
struct ScoreSequence {
  std::vector<int> scores;
  friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;
};

bool satisfies_landau(std::span<const int> nondecreasing_scores);

/// Symbol of a rotational tournament on Z_n.
struct RotationalSymbol {
  int n = 0;
  std::vector<int> members;

  /// Throws TournamentError unless exactly one of d, n-d is a member for every d.
  void validate() const;
};

Tournament transitive(int n);
Tournament rotational(const RotationalSymbol& symbol);
Tournament consecutive_rotational(int n);
Tournament quadratic_residue_tournament(int p);

ScoreSequence score_sequence(const Tournament& t);

bool is_regular(const Tournament& t);
bool is_nearly_regular(const Tournament& t);
bool is_transitive(const Tournament& t);
bool is_doubly_regular(const Tournament& t);
bool is_quasi_doubly_regular(const Tournament& t);

std::int64_t count_3cycles(const Tournament& t);

/// Induced 4-vertex subtournament counts by isomorphism type.
struct FourCounts {
  std::int64_t c4 = 0;   // strong, scores (1,1,2,2)
  std::int64_t t4 = 0;   // transitive, (0,1,2,3)
  std::int64_t to4 = 0;  // (1,1,1,3)
  std::int64_t tk4 = 0;  // (0,2,2,2)
};

FourCounts count_c4_t4(const Tournament& t);

/// Landau's hierarchy score 12/(n^3-n) * sum (s_i - (n-1)/2)^2.
Rational hierarchy(const Tournament& t);

}  // namespace tourney
