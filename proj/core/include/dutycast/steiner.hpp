#pragma once

#include <utility>
#include <vector>

#include "dutycast/graph.hpp"

namespace dutycast {

enum class SteinerAlgorithm { kKmb, kMehlhorn };

/// Steiner routine choice plus its documented approximation ratio.
struct SolverConfig {
  SteinerAlgorithm steiner = SteinerAlgorithm::kKmb;

  // Both supported algorithms are 2-approximations.
  int rho() const { return 2; }
};

struct SteinerTree {
  std::vector<int> nodes;                  // sorted
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, sorted
};

/// Approximate minimum Steiner tree on a unit-weight graph.
///
/// KMB: metric closure over the terminals, MST of the closure, expand closure
/// edges into shortest paths, spanning tree of the union, then repeatedly
/// prune non-terminal leaves. Mehlhorn replaces the closure with the graph
/// induced by shortest-path Voronoi regions; the rest is identical.
///
/// Throws InvalidInput for an empty terminal set and Infeasible if the
/// terminals are not in one connected component.
SteinerTree steiner_tree_approx(const UGraph& g, std::vector<int> terminals,
                                const SolverConfig& cfg = {});

}  // namespace dutycast
