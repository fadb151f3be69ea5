#pragma once

#include <map>
#include <vector>

#include "dutycast/network.hpp"

namespace dutycast {

/// Rooted tree stored as a parent map. Construction checks that the map forms
/// a single tree hanging off the root; whether its edges exist in a given
/// network is checked separately by is_tree_in(network).
class MulticastTree {
 public:
  // Single-node tree.
  explicit MulticastTree(NodeId root = 0);

  // parent[v] = parent of v for every non-root node. Throws InvalidInput on
  // cycles, a parent entry for the root, or nodes not connected to the root.
  static MulticastTree from_parents(NodeId root, std::map<NodeId, NodeId> parent);

  // Orients an undirected edge list away from root. Throws InvalidInput if the
  // edges do not form a tree containing root.
  static MulticastTree from_edges(NodeId root, const std::vector<Edge>& edges);

  NodeId root() const { return root_; }
  const std::map<NodeId, NodeId>& parents() const { return parent_; }

  bool contains(NodeId u) const { return u == root_ || parent_.contains(u); }
  std::size_t size() const { return parent_.size() + 1; }

  // N(T), sorted.
  std::vector<NodeId> nodes() const;
  // E(T) as (parent, child), sorted by child.
  std::vector<Edge> edges() const;
  // child(u, T), sorted. Empty for leaves and for nodes outside the tree.
  const std::vector<NodeId>& children(NodeId u) const;
  // Tree neighbors nb_T(u): children plus parent.
  std::vector<NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const;
  // Depth of u below the root (root = 0).
  std::size_t depth(NodeId u) const;

  friend bool operator==(const MulticastTree& a, const MulticastTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  NodeId root_;
  std::map<NodeId, NodeId> parent_;
  std::map<NodeId, std::vector<NodeId>> children_;
};

/// Derived node classes of a tree. For a single-node tree all sets are empty.
struct TreeViews {
  std::vector<NodeId> nodes;        // N(T)
  std::vector<Edge> edges;          // E(T)
  std::vector<NodeId> degree_one;   // d1(T)
  std::vector<NodeId> multi_degree; // d+(T)
  std::vector<NodeId> non_leaf;     // nl(T): d+(T), plus the root if it has degree one
};

TreeViews tree_views(const MulticastTree& tree);

// True if every tree edge is an edge of net and every tree node exists.
bool is_tree_in(const MulticastTree& tree, const Network& net);

// True if every terminal is a tree node and the tree is rooted at the source.
bool spans(const MulticastTree& tree, const MulticastInstance& inst);

/// B: transmit slots for each non-leaf node of a tree.
using TransmissionSchedule = std::map<NodeId, SlotSet>;

struct MulticastPlan {
  MulticastTree tree;
  TransmissionSchedule schedule;

  friend bool operator==(const MulticastPlan&, const MulticastPlan&) = default;
};

/// Feasibility: for every non-leaf u, B(u) hits Gamma(v) for each child v.
/// Throws InvalidInput if the schedule's domain is not exactly nl(tree).
bool is_feasible_schedule(const MulticastTree& tree, const TransmissionSchedule& schedule,
                          const Network& net);

// Sum over B of |B(u)|.
std::int64_t transmission_count(const TransmissionSchedule& schedule);

/// Pi(T, B) = sum |B(u)| * e_s + (|N(T)| - 1) * e_r. Does not check feasibility.
Energy energy_cost(const MulticastPlan& plan, const EnergyModel& model);

// Feasible, spans the instance, rooted at the source, and embedded in net.
bool is_valid_plan(const MulticastPlan& plan, const Network& net, const MulticastInstance& inst);

}  // namespace dutycast
