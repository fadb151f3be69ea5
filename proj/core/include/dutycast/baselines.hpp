#pragma once

#include <string>
#include <string_view>

#include "dutycast/steiner.hpp"
#include "dutycast/tree.hpp"

namespace dutycast {

// Duty-cycle-oblivious comparison trees.
enum class BaselineKind { kSpt, kAmst, kMnt };

std::string to_string(BaselineKind kind);
BaselineKind parse_baseline(std::string_view name);

// Union of hop-count shortest paths from the source. Each node's parent is
// its smallest-id neighbor one BFS level closer to the source.
MulticastTree spt_tree(const Network& net, const MulticastInstance& inst);

// Steiner tree of the terminals on unit-weight G, rooted at the source.
MulticastTree amst_tree(const Network& net, const MulticastInstance& inst,
                        const SolverConfig& cfg = {});

/// Forwarder-minimizing heuristic. Grows the tree from the source; at each
/// step every tree node offers attachment at cost 0 if it already forwards
/// and 1 otherwise, every new intermediate node costs 1, and the unconnected
/// terminal with the cheapest path (smallest id on ties) is attached along it.
MulticastTree mnt_tree(const Network& net, const MulticastInstance& inst);

// B(u) = greedy hitting set of the children's schedules, for u in nl(tree).
TransmissionSchedule schedule_tree(const MulticastTree& tree, const Network& net);

MulticastPlan run_baseline(BaselineKind kind, const Network& net, const MulticastInstance& inst,
                           const SolverConfig& cfg = {});

}  // namespace dutycast
