#include "dutycast/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dutycast/errors.hpp"

namespace dutycast {

namespace {
const std::vector<NodeId> kNoChildren;
}

MulticastTree::MulticastTree(NodeId root) : root_(root) {}

MulticastTree MulticastTree::from_parents(NodeId root, std::map<NodeId, NodeId> parent) {
  if (parent.contains(root)) {
    throw InvalidInput("tree root " + std::to_string(root) + " has a parent");
  }
  MulticastTree tree(root);
  for (const auto& [child, par] : parent) {
    if (par != root && !parent.contains(par)) {
      throw InvalidInput("parent " + std::to_string(par) + " of node " + std::to_string(child) +
                         " is not in the tree");
    }
  }
  // Every node must reach the root within |parent| steps.
  for (const auto& entry : parent) {
    NodeId cur = entry.first;
    std::size_t steps = 0;
    while (cur != root) {
      if (++steps > parent.size()) {
        throw InvalidInput("parent map contains a cycle through node " +
                           std::to_string(entry.first));
      }
      cur = parent.at(cur);
    }
  }
  tree.parent_ = std::move(parent);
  for (const auto& [child, par] : tree.parent_) tree.children_[par].push_back(child);
  return tree;
}

MulticastTree MulticastTree::from_edges(NodeId root, const std::vector<Edge>& edges) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [u, v] : edges) {
    if (u == v) throw InvalidInput("tree edge is a self loop at " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [_, nb] : adj) std::sort(nb.begin(), nb.end());
  if (!edges.empty() && !adj.contains(root)) {
    throw InvalidInput("root " + std::to_string(root) + " is not on any tree edge");
  }
  std::map<NodeId, NodeId> parent;
  std::set<NodeId> seen{root};
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u]) {
      if (seen.insert(v).second) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (seen.size() != adj.size() + (adj.empty() ? 1 : 0) || parent.size() != edges.size()) {
    throw InvalidInput("edge list is not a tree containing the root");
  }
  return from_parents(root, std::move(parent));
}

std::vector<NodeId> MulticastTree::nodes() const {
  std::vector<NodeId> out;
  out.reserve(size());
  out.push_back(root_);
  for (const auto& [child, _] : parent_) out.push_back(child);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> MulticastTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent_.size());
  for (const auto& [child, par] : parent_) out.emplace_back(par, child);
  return out;
}

const std::vector<NodeId>& MulticastTree::children(NodeId u) const {
  auto it = children_.find(u);
  return it == children_.end() ? kNoChildren : it->second;
}

std::vector<NodeId> MulticastTree::neighbors(NodeId u) const {
  std::vector<NodeId> out = children(u);
  if (auto it = parent_.find(u); it != parent_.end()) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MulticastTree::degree(NodeId u) const {
  return children(u).size() + (parent_.contains(u) ? 1 : 0);
}

std::size_t MulticastTree::depth(NodeId u) const {
  std::size_t d = 0;
  while (u != root_) {
    u = parent_.at(u);
    ++d;
  }
  return d;
}

TreeViews tree_views(const MulticastTree& tree) {
  TreeViews v;
  v.nodes = tree.nodes();
  v.edges = tree.edges();
  if (v.nodes.size() == 1) return v;
  for (NodeId u : v.nodes) {
    const auto deg = tree.degree(u);
    if (deg == 1) {
      v.degree_one.push_back(u);
    } else {
      v.multi_degree.push_back(u);
    }
    if (deg > 1 || u == tree.root()) v.non_leaf.push_back(u);
  }
  return v;
}

bool is_tree_in(const MulticastTree& tree, const Network& net) {
  if (!net.has_node(tree.root())) return false;
  return std::all_of(tree.parents().begin(), tree.parents().end(), [&](const auto& entry) {
    return net.has_edge(entry.first, entry.second);
  });
}

bool spans(const MulticastTree& tree, const MulticastInstance& inst) {
  if (tree.root() != inst.source()) return false;
  return std::all_of(inst.terminals().begin(), inst.terminals().end(),
                     [&](NodeId m) { return tree.contains(m); });
}

bool is_feasible_schedule(const MulticastTree& tree, const TransmissionSchedule& schedule,
                          const Network& net) {
  const auto nl = tree_views(tree).non_leaf;
  if (nl.size() != schedule.size() ||
      !std::equal(nl.begin(), nl.end(), schedule.begin(),
                  [](NodeId u, const auto& entry) { return u == entry.first; })) {
    throw InvalidInput("schedule domain differs from the non-leaf nodes of the tree");
  }
  for (const auto& [u, slots] : schedule) {
    for (NodeId v : tree.children(u)) {
      if (!intersects(slots, net.active(v))) return false;
    }
  }
  return true;
}

std::int64_t transmission_count(const TransmissionSchedule& schedule) {
  std::int64_t total = 0;
  for (const auto& [_, slots] : schedule) total += static_cast<std::int64_t>(slots.size());
  return total;
}

Energy energy_cost(const MulticastPlan& plan, const EnergyModel& model) {
  return transmission_count(plan.schedule) * model.send +
         static_cast<Energy>(plan.tree.size() - 1) * model.receive;
}

bool is_valid_plan(const MulticastPlan& plan, const Network& net, const MulticastInstance& inst) {
  if (!is_tree_in(plan.tree, net) || !spans(plan.tree, inst)) return false;
  try {
    return is_feasible_schedule(plan.tree, plan.schedule, net);
  } catch (const InvalidInput&) {
    return false;
  }
}

}  // namespace dutycast
