#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dutycast/extended_graph.hpp"
#include "dutycast/steiner.hpp"
#include "dutycast/tree.hpp"

namespace dutycast {

/// A tree of satellites such that every terminal is adjacent (in the extended
/// graph) to at least one of its nodes.
struct SatelliteBridge {
  std::vector<ExtNodeId> nodes;                        // sorted
  std::vector<std::pair<ExtNodeId, ExtNodeId>> edges;  // (a, b) with a < b

  std::size_t size() const { return nodes.size(); }
};

// Structural check: satellites only, a tree (connected, |E| = |N| - 1, edges
// present in g), every terminal covered.
bool is_satellite_bridge(const SatelliteBridge& sb, const ExtendedGraph& g,
                         const std::vector<NodeId>& terminals);

/// Result of mapping a bridge onto the base network.
struct BridgeMapping {
  // Spanning tree of G' rooted at the source. Spans M; internal nodes are
  // nuclear nodes of the bridge.
  MulticastTree tree;
  // F restricted to d+(tree): slots of that node's bridge satellites.
  std::map<NodeId, SlotSet> slots;
  // Partition of the bridge by nuclear node: a_i -> slots of A_i.
  std::map<NodeId, SlotSet> partition;
  // Bridge node each terminal outside the partition was attached through.
  std::map<NodeId, ExtNodeId> attachment;
};

/// Greedy cover of the terminals by satellites: repeatedly take the satellite
/// adjacent to the most uncovered terminals (smallest ExtNodeId on ties).
/// Throws Infeasible naming the first terminal without a satellite neighbor.
std::vector<ExtNodeId> greedy_satellite_cover(const ExtendedGraph& g,
                                              const std::vector<NodeId>& terminals);

/// Connects a satellite cover with an approximate Steiner tree in the
/// satellite subgraph. Throws Infeasible if the cover is disconnected there.
SatelliteBridge connect_cover(const ExtendedGraph& g, const std::vector<ExtNodeId>& cover,
                              const SolverConfig& cfg);

/// Approximate minimum satellite bridge: greedy cover, then Steiner connection.
SatelliteBridge find_msb(const ExtendedGraph& g, const std::vector<NodeId>& terminals,
                         const SolverConfig& cfg = {});

/// Maps a bridge to a tree in G plus per-node slot sets:
///   1. partition the bridge by nuclear node (A_1..A_q, nuclear set A);
///   2. attach each terminal outside A to its smallest adjacent bridge node;
///   3. build G' on M + A from bridge edges crossing partitions and the
///      attachment edges;
///   4. take the BFS tree of G' from the source; F(a_i) = slots of A_i.
/// Throws InvalidInput for a malformed bridge.
BridgeMapping map_bridge_to_tree(const SatelliteBridge& sb, const ExtendedGraph& g,
                                 const MulticastInstance& inst);

/// Turns a mapping into a plan: B(u) = F(u) on d+(T); a degree-one root sends
/// once on the smallest active slot of its only child.
MulticastPlan plan_from_mapping(const BridgeMapping& mapping, const Network& net);

/// Full approximation: extended graph, approximate bridge, mapping, schedule.
/// A single-terminal instance yields the empty zero-cost plan. Throws
/// Infeasible if the terminals are not connected in net.
MulticastPlan solve_memtcs(const Network& net, const MulticastInstance& inst,
                           const SolverConfig& cfg = {});

}  // namespace dutycast
