#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dutycast {

using NodeId = std::int32_t;
using Slot = std::int32_t;
using Energy = std::int64_t;

// Sorted, duplicate-free list of 1-based slot indices.
using SlotSet = std::vector<Slot>;

SlotSet make_slot_set(std::vector<Slot> slots);
bool intersects(const SlotSet& a, const SlotSet& b);
bool contains(const SlotSet& set, Slot slot);

// Active slots of one node within the working period. Range and non-emptiness
// are checked by validate_network, not here, so invalid inputs can still be
// represented and reported.
class DutySchedule {
 public:
  DutySchedule() = default;
  explicit DutySchedule(std::vector<Slot> active) : active_(make_slot_set(std::move(active))) {}

  const SlotSet& active_slots() const { return active_; }
  bool is_active(Slot slot) const { return contains(active_, slot); }
  bool empty() const { return active_.empty(); }
  std::size_t size() const { return active_.size(); }

  friend bool operator==(const DutySchedule&, const DutySchedule&) = default;

 private:
  SlotSet active_;
};

struct Position {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

using Edge = std::pair<NodeId, NodeId>;

/// Undirected duty-cycled network G = (V, E) with node ids 0..n-1, a working
/// period of K slots, and one DutySchedule per node.
///
/// The constructor stores its input verbatim (edges normalized to u < v) so
/// that validate_network can report every problem at once. Adjacency only
/// contains edges whose endpoints exist and are distinct.
class Network {
 public:
  Network() = default;
  Network(int period, std::vector<DutySchedule> schedules, std::vector<Edge> edges,
          std::vector<Position> positions = {});

  int period() const { return period_; }
  std::size_t node_count() const { return schedules_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const DutySchedule& schedule(NodeId u) const { return schedules_.at(static_cast<std::size_t>(u)); }
  const SlotSet& active(NodeId u) const { return schedule(u).active_slots(); }
  const std::vector<NodeId>& neighbors(NodeId u) const {
    return adjacency_.at(static_cast<std::size_t>(u));
  }
  bool has_node(NodeId u) const { return u >= 0 && static_cast<std::size_t>(u) < node_count(); }
  bool has_edge(NodeId u, NodeId v) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  // Delta: maximum neighbor count over all nodes (0 for an empty network).
  std::size_t max_degree() const;

  bool has_positions() const { return !positions_.empty(); }
  const std::vector<Position>& positions() const { return positions_; }

  friend bool operator==(const Network& a, const Network& b) {
    return a.period_ == b.period_ && a.schedules_ == b.schedules_ && a.edges_ == b.edges_ &&
           a.positions_ == b.positions_;
  }

 private:
  int period_ = 0;
  std::vector<DutySchedule> schedules_;
  std::vector<Edge> edges_;
  std::vector<Position> positions_;
  std::vector<std::vector<NodeId>> adjacency_;
};

enum class ViolationKind {
  kNonPositivePeriod,
  kEmptySchedule,
  kSlotOutOfRange,
  kDanglingEdge,
  kSelfLoop,
  kDuplicateEdge,
  kPositionCountMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

std::string to_string(ViolationKind kind);

// Empty result means the network is well formed.
std::vector<Violation> validate_network(const Network& net);

// Throws InvalidInput listing every violation.
void require_valid(const Network& net);

/// Per-packet send and receive costs; e_s >= e_r >= 0.
struct EnergyModel {
  Energy send = 0;
  Energy receive = 0;

  static EnergyModel make(Energy send, Energy receive);
};

/// Terminal set M with source s in M.
class MulticastInstance {
 public:
  MulticastInstance() = default;
  MulticastInstance(NodeId source, std::vector<NodeId> terminals);

  NodeId source() const { return source_; }
  const std::vector<NodeId>& terminals() const { return terminals_; }
  bool is_terminal(NodeId u) const;

 private:
  NodeId source_ = 0;
  std::vector<NodeId> terminals_;
};

// Throws InvalidInput if a terminal is not a node of net.
void require_compatible(const Network& net, const MulticastInstance& inst);

// True if every terminal lies in the connected component of the source.
bool terminals_connected(const Network& net, const MulticastInstance& inst);

}  // namespace dutycast
