#include "tourney/digraph.hpp"

#include <bit>

namespace tourney {

Digraph::Digraph(int n) : n_(n) {
  if (n < 1 || n > Tournament::kMaxVertices) {
    throw TournamentError(TournamentErrorKind::InvalidArgument, "digraph vertex count must be in [1, 64]");
  }
  out_.assign(n, 0);
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  Digraph g(n);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw TournamentError(TournamentErrorKind::VertexOutOfRange, "arc endpoint out of range");
    }
    if (a.tail == a.head) throw TournamentError(TournamentErrorKind::Loop, "digraphs here are loopless");
    const std::uint64_t hb = std::uint64_t{1} << a.head;
    if (g.out_[a.tail] & hb) throw TournamentError(TournamentErrorKind::DuplicatePair, "repeated arc");
    g.out_[a.tail] |= hb;
    ++g.g_;
  }
  return g;
}

Digraph Digraph::undirected(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return from_arcs(n, arcs);
}

Digraph Digraph::from_tournament(const Tournament& t) { return from_arcs(t.size(), t.arcs()); }

int Digraph::out_degree(int v) const noexcept { return std::popcount(out_[v]); }

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (has_arc(u, v)) result.push_back({u, v});
  return result;
}

bool Digraph::is_acyclic() const {
  // Kahn: repeatedly strip vertices with no remaining out-arcs.
  std::uint64_t alive = n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (int v = 0; v < n_; ++v) {
      if (((alive >> v) & 1U) && (out_[v] & alive) == 0) {
        alive &= ~(std::uint64_t{1} << v);
        progress = true;
      }
    }
  }
  return alive == 0;
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (has_arc(u, v) != has_arc(v, u)) return false;
  return true;
}

}  // namespace tourney
