#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dutycast/graph.hpp"
#include "dutycast/network.hpp"

namespace dutycast {

/// Node of the extended graph: either the nuclear node u itself (slot == 0)
/// or its satellite on slot i (slot >= 1). Ordered by (node, slot), so a
/// nuclear node sorts before its satellites.
struct ExtNodeId {
  NodeId node = 0;
  Slot slot = 0;

  static constexpr ExtNodeId nuclear(NodeId u) { return {u, 0}; }
  static constexpr ExtNodeId satellite(NodeId u, Slot i) { return {u, i}; }

  constexpr bool is_nuclear() const { return slot == 0; }
  constexpr bool is_satellite() const { return slot != 0; }

  friend constexpr auto operator<=>(const ExtNodeId&, const ExtNodeId&) = default;
};

// "v" for nuclear nodes, "λ(u,i)" for satellites.
std::string to_string(const ExtNodeId& id);

/// Extended graph over a network. Nodes are the nuclear nodes V plus, for each
/// u, one satellite per slot in the union of its neighbors' schedules. Edges:
///   - every pair within {u} plus u's satellites;
///   - for each (u, v) in E, i in Gamma(v), j in Gamma(u):
///     (sat(u,i), sat(v,j)), (sat(u,i), v) and (u, sat(v,j)).
/// Edges produced by both rules are stored once.
///
/// Holds a pointer to the network; the network must outlive the graph.
class ExtendedGraph {
 public:
  explicit ExtendedGraph(const Network& net);

  const Network& base() const { return *base_; }

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t satellite_count() const { return ids_.size() - base_->node_count(); }

  // Psi(u): slots of u's satellites, sorted.
  const SlotSet& satellite_slots(NodeId u) const {
    return satellite_slots_.at(static_cast<std::size_t>(u));
  }
  bool has_node(const ExtNodeId& id) const;

  // Flat index view: indices follow ExtNodeId order.
  int index_of(const ExtNodeId& id) const;
  const ExtNodeId& id_at(int index) const { return ids_.at(static_cast<std::size_t>(index)); }
  const std::vector<ExtNodeId>& ids() const { return ids_; }
  const UGraph& flat() const { return flat_; }

  std::vector<ExtNodeId> neighbors(const ExtNodeId& id) const;
  bool adjacent(const ExtNodeId& a, const ExtNodeId& b) const;

  // All satellites, sorted.
  std::vector<ExtNodeId> satellites() const;

  // Edges as (a, b) with a < b, sorted.
  std::vector<std::pair<ExtNodeId, ExtNodeId>> edge_list() const;

 private:
  const Network* base_;
  std::vector<SlotSet> satellite_slots_;
  std::vector<int> offset_;
  std::vector<ExtNodeId> ids_;
  UGraph flat_;
  std::size_t edge_count_ = 0;
};

/// Nuclear neighbors of a satellite: the terminals it can cover. At most
/// Delta + 1 nodes. Throws InvalidInput if w is nuclear or absent.
std::vector<NodeId> satellite_coverage(const ExtendedGraph& g, const ExtNodeId& w);

/// The subgraph induced by the satellites, with unit edge weights.
struct SatelliteSubgraph {
  UGraph graph;
  std::vector<ExtNodeId> ids;  // graph index -> satellite

  int index_of(const ExtNodeId& id) const;
};

SatelliteSubgraph induced_satellite_subgraph(const ExtendedGraph& g);

/// Upper bounds on node and edge counts: (K+1)|V| and C(K+1,2)|V| + 3K^2|E|.
struct ExtendedGraphBounds {
  std::size_t max_nodes;
  std::size_t max_edges;
};
ExtendedGraphBounds size_bounds(const Network& net);

// One "a -- b" line per edge in edge_list() order.
std::string dump_edges(const ExtendedGraph& g);

}  // namespace dutycast
