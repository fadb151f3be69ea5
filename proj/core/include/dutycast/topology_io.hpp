#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dutycast/network.hpp"

namespace dutycast {

/// JSON topology document:
///
///   {
///     "version": 1,
///     "K": 4,
///     "nodes": [{"id": 0, "x": 1.5, "y": 2.0, "active_slots": [1, 3]}, ...],
///     "edges": [[0, 1], ...],
///     "multicast": {"source": 0, "terminals": [0, 2]}
///   }
///
/// Node ids must be 0..n-1 in order. "x"/"y" are omitted when the network has
/// no positions; "multicast" is optional.
struct TopologyDocument {
  Network network;
  std::optional<MulticastInstance> instance;
};

inline constexpr int kTopologyVersion = 1;

std::string write_topology(const Network& net, const MulticastInstance* inst = nullptr);

// Throws InvalidInput on malformed JSON, unknown version or schema errors.
// Network-level problems (empty schedules, dangling edges) are left for
// validate_network.
TopologyDocument read_topology(std::string_view text);

}  // namespace dutycast
