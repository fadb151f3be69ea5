#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dutycast {

/// Plain undirected unit-weight graph over dense indices 0..n-1. Used by the
/// Steiner routines, which run both on the base network and on the satellite
/// subgraph of the extended graph.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(std::size_t n) : adj_(n) {}

  // Symmetrizes, sorts and deduplicates; drops self loops.
  static UGraph from_adjacency(std::vector<std::vector<int>> adj);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;

  // Adds u-v unless already present or u == v. Keeps neighbor lists sorted.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int u) const { return adj_.at(static_cast<std::size_t>(u)); }

  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
};

inline constexpr int kUnreachable = -1;

struct BfsResult {
  std::vector<int> dist;    // kUnreachable where not reached
  std::vector<int> parent;  // -1 for sources and unreached nodes
};

// Multi-source BFS. Neighbors are expanded in ascending order, so the parent
// of each node is the first-dequeued node adjacent to it.
BfsResult bfs(const UGraph& g, const std::vector<int>& sources);

}  // namespace dutycast
