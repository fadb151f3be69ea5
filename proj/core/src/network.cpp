#include "dutycast/network.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dutycast/errors.hpp"

namespace dutycast {

SlotSet make_slot_set(std::vector<Slot> slots) {
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  return slots;
}

bool intersects(const SlotSet& a, const SlotSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool contains(const SlotSet& set, Slot slot) {
  return std::binary_search(set.begin(), set.end(), slot);
}

Network::Network(int period, std::vector<DutySchedule> schedules, std::vector<Edge> edges,
                 std::vector<Position> positions)
    : period_(period),
      schedules_(std::move(schedules)),
      edges_(std::move(edges)),
      positions_(std::move(positions)),
      adjacency_(schedules_.size()) {
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
  }
  for (const auto& [u, v] : edges_) {
    if (u == v || !has_node(u) || !has_node(v)) continue;
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool Network::has_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return false;
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Network::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNonPositivePeriod: return "non-positive period";
    case ViolationKind::kEmptySchedule: return "empty schedule";
    case ViolationKind::kSlotOutOfRange: return "slot out of range";
    case ViolationKind::kDanglingEdge: return "dangling edge";
    case ViolationKind::kSelfLoop: return "self loop";
    case ViolationKind::kDuplicateEdge: return "duplicate edge";
    case ViolationKind::kPositionCountMismatch: return "position count mismatch";
  }
  return "unknown";
}

std::vector<Violation> validate_network(const Network& net) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, const std::string& detail) {
    out.push_back({kind, to_string(kind) + ": " + detail});
  };

  if (net.period() <= 0) {
    report(ViolationKind::kNonPositivePeriod, "K = " + std::to_string(net.period()));
  }
  for (std::size_t u = 0; u < net.node_count(); ++u) {
    const auto& slots = net.active(static_cast<NodeId>(u));
    if (slots.empty()) {
      report(ViolationKind::kEmptySchedule, "node " + std::to_string(u));
    }
    for (Slot s : slots) {
      if (s < 1 || s > net.period()) {
        report(ViolationKind::kSlotOutOfRange,
               "node " + std::to_string(u) + " slot " + std::to_string(s));
      }
    }
  }
  std::set<Edge> seen;
  for (const auto& [u, v] : net.edges()) {
    const std::string label = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (!net.has_node(u) || !net.has_node(v)) {
      report(ViolationKind::kDanglingEdge, label);
    } else if (u == v) {
      report(ViolationKind::kSelfLoop, label);
    } else if (!seen.insert({u, v}).second) {
      report(ViolationKind::kDuplicateEdge, label);
    }
  }
  if (net.has_positions() && net.positions().size() != net.node_count()) {
    report(ViolationKind::kPositionCountMismatch,
           std::to_string(net.positions().size()) + " positions for " +
               std::to_string(net.node_count()) + " nodes");
  }
  return out;
}

void require_valid(const Network& net) {
  const auto violations = validate_network(net);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid network:";
  for (const auto& v : violations) msg << "\n  " << v.message;
  throw InvalidInput(msg.str());
}

EnergyModel EnergyModel::make(Energy send, Energy receive) {
  if (receive < 0 || send < receive) {
    throw InvalidInput("energy model requires e_s >= e_r >= 0, got e_s=" + std::to_string(send) +
                       " e_r=" + std::to_string(receive));
  }
  return EnergyModel{send, receive};
}

MulticastInstance::MulticastInstance(NodeId source, std::vector<NodeId> terminals)
    : source_(source) {
  terminals.push_back(source);
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  terminals_ = std::move(terminals);
}

bool MulticastInstance::is_terminal(NodeId u) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), u);
}

void require_compatible(const Network& net, const MulticastInstance& inst) {
  for (NodeId m : inst.terminals()) {
    if (!net.has_node(m)) {
      throw InvalidInput("terminal " + std::to_string(m) + " is not a node of the network");
    }
  }
}

bool terminals_connected(const Network& net, const MulticastInstance& inst) {
  require_compatible(net, inst);
  std::vector<char> seen(net.node_count(), 0);
  std::deque<NodeId> queue{inst.source()};
  seen[static_cast<std::size_t>(inst.source())] = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : net.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  return std::all_of(inst.terminals().begin(), inst.terminals().end(),
                     [&](NodeId m) { return seen[static_cast<std::size_t>(m)] != 0; });
}

}  // namespace dutycast
