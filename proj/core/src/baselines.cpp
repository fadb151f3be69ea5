#include "dutycast/baselines.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "dutycast/errors.hpp"
#include "dutycast/graph.hpp"
#include "dutycast/hitting_set.hpp"

namespace dutycast {

namespace {

UGraph to_ugraph(const Network& net) {
  std::vector<std::vector<int>> adj(net.node_count());
  for (std::size_t u = 0; u < net.node_count(); ++u) {
    const auto& nb = net.neighbors(static_cast<NodeId>(u));
    adj[u].assign(nb.begin(), nb.end());
  }
  return UGraph::from_adjacency(std::move(adj));
}

void check_instance(const Network& net, const MulticastInstance& inst) {
  require_valid(net);
  require_compatible(net, inst);
  if (!terminals_connected(net, inst)) {
    throw Infeasible("terminals are not connected to the source");
  }
}

}  // namespace

std::string to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kSpt: return "spt";
    case BaselineKind::kAmst: return "amst";
    case BaselineKind::kMnt: return "mnt";
  }
  return "unknown";
}

BaselineKind parse_baseline(std::string_view name) {
  if (name == "spt") return BaselineKind::kSpt;
  if (name == "amst") return BaselineKind::kAmst;
  if (name == "mnt") return BaselineKind::kMnt;
  throw InvalidInput("unknown baseline '" + std::string(name) + "'");
}

MulticastTree spt_tree(const Network& net, const MulticastInstance& inst) {
  check_instance(net, inst);
  const auto dist = bfs(to_ugraph(net), {inst.source()}).dist;
  std::map<NodeId, NodeId> parent;
  for (NodeId m : inst.terminals()) {
    NodeId cur = m;
    while (cur != inst.source() && !parent.contains(cur)) {
      const int want = dist[static_cast<std::size_t>(cur)] - 1;
      const auto& nb = net.neighbors(cur);
      const auto it = std::find_if(nb.begin(), nb.end(), [&](NodeId w) {
        return dist[static_cast<std::size_t>(w)] == want;
      });
      parent[cur] = *it;
      cur = *it;
    }
  }
  return MulticastTree::from_parents(inst.source(), std::move(parent));
}

MulticastTree amst_tree(const Network& net, const MulticastInstance& inst,
                        const SolverConfig& cfg) {
  check_instance(net, inst);
  const auto st = steiner_tree_approx(
      to_ugraph(net), std::vector<int>(inst.terminals().begin(), inst.terminals().end()), cfg);
  std::vector<Edge> edges(st.edges.begin(), st.edges.end());
  return MulticastTree::from_edges(inst.source(), edges);
}

MulticastTree mnt_tree(const Network& net, const MulticastInstance& inst) {
  check_instance(net, inst);
  const std::size_t n = net.node_count();
  constexpr int kInf = std::numeric_limits<int>::max();

  std::vector<char> in_tree(n, 0);
  std::vector<char> forwards(n, 0);
  in_tree[static_cast<std::size_t>(inst.source())] = 1;
  std::map<NodeId, NodeId> parent;

  std::set<NodeId> pending;
  for (NodeId m : inst.terminals()) {
    if (m != inst.source()) pending.insert(m);
  }

  while (!pending.empty()) {
    // dist[x]: forwarders added if x joins as a leaf.
    std::vector<int> dist(n, kInf);
    std::vector<NodeId> pred(n, -1);
    std::set<std::pair<int, NodeId>> frontier;
    for (std::size_t a = 0; a < n; ++a) {
      if (!in_tree[a]) continue;
      const int cost = forwards[a] ? 0 : 1;
      for (NodeId x : net.neighbors(static_cast<NodeId>(a))) {
        const auto xi = static_cast<std::size_t>(x);
        if (!in_tree[xi] && cost < dist[xi]) {
          frontier.erase({dist[xi], x});
          dist[xi] = cost;
          pred[xi] = static_cast<NodeId>(a);
          frontier.insert({cost, x});
        }
      }
    }
    while (!frontier.empty()) {
      const auto [d, x] = *frontier.begin();
      frontier.erase(frontier.begin());
      for (NodeId y : net.neighbors(x)) {
        const auto yi = static_cast<std::size_t>(y);
        if (!in_tree[yi] && d + 1 < dist[yi]) {
          frontier.erase({dist[yi], y});
          dist[yi] = d + 1;
          pred[yi] = x;
          frontier.insert({d + 1, y});
        }
      }
    }

    NodeId target = -1;
    for (NodeId m : pending) {
      const auto mi = static_cast<std::size_t>(m);
      if (dist[mi] != kInf && (target < 0 || dist[mi] < dist[static_cast<std::size_t>(target)])) {
        target = m;
      }
    }
    if (target < 0) throw Infeasible("MNT could not reach the remaining terminals");

    NodeId cur = target;
    while (!in_tree[static_cast<std::size_t>(cur)]) {
      const NodeId p = pred[static_cast<std::size_t>(cur)];
      parent[cur] = p;
      in_tree[static_cast<std::size_t>(cur)] = 1;
      forwards[static_cast<std::size_t>(p)] = 1;
      pending.erase(cur);
      cur = p;
    }
  }
  return MulticastTree::from_parents(inst.source(), std::move(parent));
}

TransmissionSchedule schedule_tree(const MulticastTree& tree, const Network& net) {
  TransmissionSchedule schedule;
  for (NodeId u : tree_views(tree).non_leaf) {
    std::vector<SlotSet> collection;
    for (NodeId v : tree.children(u)) collection.push_back(net.active(v));
    schedule.emplace(u, greedy_hitting_set(collection));
  }
  return schedule;
}

MulticastPlan run_baseline(BaselineKind kind, const Network& net, const MulticastInstance& inst,
                           const SolverConfig& cfg) {
  MulticastTree tree = [&] {
    switch (kind) {
      case BaselineKind::kSpt: return spt_tree(net, inst);
      case BaselineKind::kAmst: return amst_tree(net, inst, cfg);
      case BaselineKind::kMnt: return mnt_tree(net, inst);
    }
    throw InvalidInput("unknown baseline");
  }();
  auto schedule = schedule_tree(tree, net);
  return MulticastPlan{std::move(tree), std::move(schedule)};
}

}  // namespace dutycast
