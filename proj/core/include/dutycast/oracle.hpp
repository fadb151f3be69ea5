#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "dutycast/extended_graph.hpp"
#include "dutycast/solver.hpp"
#include "dutycast/tree.hpp"

namespace dutycast {

// Exhaustive reference solvers. Every entry point checks its budget before
// enumerating and throws BudgetExceeded instead of running away.

struct OracleBudget {
  std::size_t max_nodes = 9;       // |V|
  int max_period = 5;              // K
  std::size_t max_universe = 16;   // distinct slots in a hitting-set instance
  std::uint64_t max_subsets = 20'000'000;  // candidate sets or trees examined
};

using Rational = boost::rational<std::int64_t>;

// H(n) = 1 + 1/2 + ... + 1/n. Throws InvalidInput for n == 0 and for n large
// enough to overflow the 64-bit denominator.
Rational harmonic(std::size_t n);

/// Minimum-cardinality hitting set. Subsets are tried by increasing size in
/// lexicographic order; the first hit is returned.
SlotSet exact_min_hitting_set(const std::vector<SlotSet>& collection,
                              const OracleBudget& budget = {});

/// Minimum set of satellites adjacent to every terminal (no connectivity).
std::vector<ExtNodeId> exact_min_cover(const ExtendedGraph& g, const std::vector<NodeId>& terminals,
                                       const OracleBudget& budget = {});

/// Minimum satellite bridge: satellite subsets by increasing size, first one
/// that induces a connected subgraph and covers M, with its BFS spanning tree.
SatelliteBridge exact_msb(const ExtendedGraph& g, const std::vector<NodeId>& terminals,
                          const OracleBudget& budget = {});

// Xi(T): sum over d+(T) of the minimum hitting set size of the tree
// neighbors' schedules.
std::int64_t xi(const MulticastTree& tree, const Network& net, const OracleBudget& budget = {});

struct MistResult {
  std::int64_t xi = 0;
  MulticastTree witness;
};

/// Minimum of Xi over every tree of G spanning M. Witness is rooted at the
/// smallest terminal.
MistResult exact_mist_xi(const Network& net, const std::vector<NodeId>& terminals,
                         const OracleBudget& budget = {});

/// Optimal plan: every tree spanning M rooted at s, each non-leaf scheduled
/// with an exact minimum hitting set of its children's schedules.
MulticastPlan exact_memtcs(const Network& net, const MulticastInstance& inst,
                           const EnergyModel& model, const OracleBudget& budget = {});

struct StarReduction {
  Network network;
  MulticastInstance instance;
  EnergyModel model;
};

/// Hitting-set instance over elements 1..p as a star: hub 0 (the source) with
/// one leaf per subset whose schedule is that subset; e_s = 1, e_r = 0.
/// Throws InvalidInput on an empty collection or an empty subset.
StarReduction star_reduction_instance(const std::vector<SlotSet>& collection);

// Recovers the hitting-set collection from a star produced above.
std::vector<SlotSet> decode_star_reduction(const Network& star);

}  // namespace dutycast
