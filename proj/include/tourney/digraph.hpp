#pragma once

#include "tourney/tournament.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tourney {

/// Loopless directed graph on at most 64 vertices, at most one arc per ordered pair.
class Digraph {
 public:
  explicit Digraph(int n);

  static Digraph from_arcs(int n, std::span<const Arc> arcs);
  static Digraph from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }
  /// Undirected graph as a symmetric digraph: every edge {u,v} becomes u->v and v->u.
  static Digraph undirected(int n, std::span<const std::pair<int, int>> edges);
  static Digraph from_tournament(const Tournament& t);

  int size() const noexcept { return n_; }
  bool has_arc(int u, int v) const noexcept { return (out_[u] >> v) & 1U; }
  std::uint64_t out_mask(int v) const noexcept { return out_[v]; }
  int out_degree(int v) const noexcept;
  /// Total out-degree, the sum of d+(v) over all vertices.
  std::int64_t total_out_degree() const noexcept { return g_; }
  std::vector<Arc> arcs() const;
  bool is_acyclic() const;
  bool is_symmetric() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> out_;
  std::int64_t g_ = 0;
};

}  // namespace tourney
