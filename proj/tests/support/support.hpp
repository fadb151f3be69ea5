#pragma once

// Random generators and brute-force reference computations for tests. The
// references are written from the definitions directly and share no code
// with the library routines they check.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dutycast/extended_graph.hpp"
#include "dutycast/graph.hpp"
#include "dutycast/network.hpp"
#include "dutycast/tree.hpp"

namespace testsupport {

using dutycast::Edge;
using dutycast::ExtNodeId;
using dutycast::MulticastInstance;
using dutycast::Network;
using dutycast::NodeId;
using dutycast::Slot;
using dutycast::SlotSet;

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p);

struct NetworkShape {
  int min_nodes = 2;
  int max_nodes = 8;
  int min_period = 1;
  int max_period = 4;
  double extra_edge_prob = 0.25;  // on top of a random spanning tree
  double slot_prob = 0.4;         // per-slot activity, at least one slot kept
  bool connected = true;          // false: drop each tree edge with prob 0.2
};

Network random_network(Rng& rng, const NetworkShape& shape);

// Terminals drawn from the source's component: fraction in (0, 1] of it,
// at least min_terminals when the component allows.
MulticastInstance random_instance(Rng& rng, const Network& net, double fraction,
                                  std::size_t min_terminals = 1);

std::vector<SlotSet> random_collection(Rng& rng, int max_sets, int universe);

// Smallest hitting-set size by scanning every subset of 1..K as a bitmask.
std::size_t brute_min_hitting_size(const std::vector<SlotSet>& collection, int universe);

// Edge count of a minimum Steiner tree: min |S| - 1 over connected node sets
// S containing the terminals. Graph size must be small (<= 20).
int brute_steiner_edges(const dutycast::UGraph& g, const std::vector<int>& terminals);

// Extended-graph edge set recomputed straight from the construction rules.
std::set<std::pair<ExtNodeId, ExtNodeId>> derive_extended_edges(const Network& net);
std::set<ExtNodeId> derive_extended_nodes(const Network& net);

// Minimum number of satellites whose nuclear neighborhoods cover all
// terminals, computed from the rules without building the extended graph.
std::size_t brute_min_cover(const Network& net, const std::vector<NodeId>& terminals);

// Minimum energy over every edge subset of net forming a tree that contains
// the terminals, with exact per-node minimum hitting sets. Small nets only.
dutycast::Energy brute_min_energy(const Network& net, const MulticastInstance& inst,
                                  const dutycast::EnergyModel& model);

// H(n) as a double, for reporting.
double harmonic_double(std::size_t n);

// Child-by-child feasibility check independent of is_feasible_schedule.
bool schedule_hits_children(const dutycast::MulticastTree& tree,
                            const dutycast::TransmissionSchedule& schedule, const Network& net);

}  // namespace testsupport
