#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dutycast/extended_graph.hpp"
#include "dutycast/steiner.hpp"
#include "dutycast/tree.hpp"

namespace dutycast {

// Round-based simulation of the distributed greedy cover. Every extended
// graph node runs the same five-step round:
//   1. white nodes with red neighbors broadcast (election, |rnb|, id);
//   2. each red node sends "you win" to its best candidate (largest |rnb|,
//      then largest id);
//   3. a white node that won every red neighbor turns blue and broadcasts
//      "I am dominator";
//   4. red nodes hearing a dominator turn green and broadcast "I am dominated";
//   5. white nodes drop dominated senders from rnb.
// Node ids are flat extended-graph indices.

enum class NodeColor { kRed, kGreen, kWhite, kBlue };

enum class MessageKind { kElection, kYouWin, kDominator, kDominated };

std::string to_string(MessageKind kind);

inline constexpr int kBroadcast = -1;

struct MessageRecord {
  int round = 0;
  MessageKind kind = MessageKind::kElection;
  int from = 0;
  int to = kBroadcast;
};

struct SimResult {
  std::vector<ExtNodeId> cover;  // blue nodes, sorted
  int rounds = 0;
  std::uint64_t messages = 0;
  std::map<MessageKind, std::uint64_t> messages_by_kind;
  // Slots elapsed; for the base-graph run each step lasts delta slots.
  std::uint64_t time_slots = 0;
  std::vector<MessageRecord> log;
};

/// Runs the protocol on the extended graph; every transmission (broadcast or
/// unicast) counts as one message. Throws Infeasible if a terminal has no
/// satellite neighbor and ProtocolError if more than |M| rounds are needed.
SimResult simulate_distributed_cover(const ExtendedGraph& g, const std::vector<NodeId>& terminals);

/// Same protocol hosted on G: each nuclear node runs its satellites as local
/// pseudo nodes. Traffic between pseudo nodes of the same nuclear node is
/// local computation; a transmission counts only when it reaches another
/// nuclear node, and each nuclear node serializes its outgoing transmissions
/// within a step of `delta` slots (delta > K; 0 means K + 1).
SimResult simulate_on_base_graph(const Network& net, const std::vector<NodeId>& terminals,
                                 int delta = 0);

/// Cost budgets attributed to the centralized stages that stand in for the
/// distributed Steiner tree and DFS, from their published complexity bounds.
struct StageBudgets {
  std::uint64_t steiner_messages = 0;  // |M| * |V|
  std::uint64_t steiner_time = 0;      // |M| * D
  std::uint64_t dfs_messages = 0;      // |V|
  std::uint64_t dfs_time = 0;          // |V|
  int diameter = 0;                    // D of the source's component
};

struct DistributedOutcome {
  MulticastPlan plan;
  SimResult cover_stage;
  StageBudgets budgets;
};

/// Distributed cover for stage one, then the centralized Steiner connection,
/// mapping and scheduling used by solve_memtcs.
DistributedOutcome distributed_pipeline(const Network& net, const MulticastInstance& inst,
                                        const SolverConfig& cfg = {});

// "round,kind,from,to" lines with a header; broadcasts use "*" as receiver.
std::string format_message_log(const std::vector<MessageRecord>& log);

}  // namespace dutycast
