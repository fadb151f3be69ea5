#include "dutycast/solver.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dutycast/errors.hpp"

namespace dutycast {

namespace {

std::vector<NodeId> normalized(std::vector<NodeId> terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  return terminals;
}

bool covers_all(const ExtendedGraph& g, const std::vector<ExtNodeId>& nodes,
                const std::vector<NodeId>& terminals, NodeId* missing = nullptr) {
  for (NodeId m : terminals) {
    const bool covered = std::any_of(nodes.begin(), nodes.end(), [&](const ExtNodeId& w) {
      return g.adjacent(w, ExtNodeId::nuclear(m));
    });
    if (!covered) {
      if (missing != nullptr) *missing = m;
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_satellite_bridge(const SatelliteBridge& sb, const ExtendedGraph& g,
                         const std::vector<NodeId>& terminals) {
  if (sb.nodes.empty() || sb.edges.size() + 1 != sb.nodes.size()) return false;
  if (!std::is_sorted(sb.nodes.begin(), sb.nodes.end()) ||
      std::adjacent_find(sb.nodes.begin(), sb.nodes.end()) != sb.nodes.end()) {
    return false;
  }
  for (const auto& w : sb.nodes) {
    if (!w.is_satellite() || !g.has_node(w)) return false;
  }
  auto position = [&](const ExtNodeId& w) -> std::ptrdiff_t {
    auto it = std::lower_bound(sb.nodes.begin(), sb.nodes.end(), w);
    return (it != sb.nodes.end() && *it == w) ? it - sb.nodes.begin() : -1;
  };
  std::vector<std::size_t> root(sb.nodes.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [a, b] : sb.edges) {
    const auto ia = position(a);
    const auto ib = position(b);
    if (ia < 0 || ib < 0 || !g.adjacent(a, b)) return false;
    const auto ra = find(static_cast<std::size_t>(ia));
    const auto rb = find(static_cast<std::size_t>(ib));
    if (ra == rb) return false;
    root[ra] = rb;
  }
  return covers_all(g, sb.nodes, normalized(terminals));
}

std::vector<ExtNodeId> greedy_satellite_cover(const ExtendedGraph& g,
                                              const std::vector<NodeId>& terminal_list) {
  const auto terminals = normalized(terminal_list);
  const Network& net = g.base();
  std::vector<char> uncovered(net.node_count(), 0);
  for (NodeId m : terminals) {
    if (!net.has_node(m)) throw InvalidInput("terminal " + std::to_string(m) + " is not a node");
    // Nuclear nodes are only adjacent to satellites.
    if (g.flat().neighbors(g.index_of(ExtNodeId::nuclear(m))).empty()) {
      throw Infeasible("terminal " + std::to_string(m) + " has no satellite neighbor");
    }
    uncovered[static_cast<std::size_t>(m)] = 1;
  }

  std::vector<int> sats;
  std::vector<std::vector<NodeId>> reach;
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    if (g.ids()[x].is_nuclear()) continue;
    std::vector<NodeId> covered;
    for (int y : g.flat().neighbors(static_cast<int>(x))) {
      const auto& id = g.id_at(y);
      if (id.is_nuclear() && std::binary_search(terminals.begin(), terminals.end(), id.node)) {
        covered.push_back(id.node);
      }
    }
    if (!covered.empty()) {
      sats.push_back(static_cast<int>(x));
      reach.push_back(std::move(covered));
    }
  }

  std::vector<char> chosen(sats.size(), 0);
  std::vector<ExtNodeId> cover;
  std::size_t remaining = terminals.size();
  while (remaining > 0) {
    std::size_t best = sats.size();
    std::size_t best_gain = 0;
    for (std::size_t k = 0; k < sats.size(); ++k) {
      if (chosen[k]) continue;
      std::size_t gain = 0;
      for (NodeId m : reach[k]) gain += uncovered[static_cast<std::size_t>(m)] ? 1 : 0;
      if (gain > best_gain) {
        best = k;
        best_gain = gain;
      }
    }
    if (best == sats.size()) throw ProtocolError("greedy cover stalled with uncovered terminals");
    chosen[best] = 1;
    cover.push_back(g.id_at(sats[best]));
    for (NodeId m : reach[best]) {
      if (uncovered[static_cast<std::size_t>(m)]) {
        uncovered[static_cast<std::size_t>(m)] = 0;
        --remaining;
      }
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

SatelliteBridge connect_cover(const ExtendedGraph& g, const std::vector<ExtNodeId>& cover,
                              const SolverConfig& cfg) {
  const auto sub = induced_satellite_subgraph(g);
  std::vector<int> terminals;
  terminals.reserve(cover.size());
  for (const auto& c : cover) terminals.push_back(sub.index_of(c));
  SteinerTree st;
  try {
    st = steiner_tree_approx(sub.graph, terminals, cfg);
  } catch (const Infeasible&) {
    throw Infeasible("satellite cover is disconnected in the satellite subgraph");
  }
  SatelliteBridge sb;
  for (int x : st.nodes) sb.nodes.push_back(sub.ids[static_cast<std::size_t>(x)]);
  for (const auto& [a, b] : st.edges) {
    sb.edges.emplace_back(sub.ids[static_cast<std::size_t>(a)], sub.ids[static_cast<std::size_t>(b)]);
  }
  return sb;
}

SatelliteBridge find_msb(const ExtendedGraph& g, const std::vector<NodeId>& terminals,
                         const SolverConfig& cfg) {
  return connect_cover(g, greedy_satellite_cover(g, terminals), cfg);
}

BridgeMapping map_bridge_to_tree(const SatelliteBridge& sb, const ExtendedGraph& g,
                                 const MulticastInstance& inst) {
  const auto& terminals = inst.terminals();
  for (const auto& w : sb.nodes) {
    if (!w.is_satellite() || !g.has_node(w)) {
      throw InvalidInput("bridge node " + to_string(w) + " is not a satellite of the graph");
    }
  }
  NodeId missing = 0;
  if (!covers_all(g, sb.nodes, terminals, &missing)) {
    throw InvalidInput("bridge does not cover terminal " + std::to_string(missing));
  }
  if (!is_satellite_bridge(sb, g, terminals)) {
    throw InvalidInput("bridge is not a satellite tree");
  }

  BridgeMapping out;
  for (const auto& w : sb.nodes) out.partition[w.node].push_back(w.slot);
  for (auto& [_, slots] : out.partition) slots = make_slot_set(std::move(slots));

  std::map<NodeId, std::set<NodeId>> adj;
  auto link = [&](NodeId a, NodeId b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (const auto& [a, _] : out.partition) adj[a];
  for (NodeId m : terminals) adj[m];

  for (const auto& [a, b] : sb.edges) {
    if (a.node != b.node) link(a.node, b.node);
  }
  for (NodeId m : terminals) {
    if (out.partition.contains(m)) continue;
    for (const auto& w : sb.nodes) {
      if (g.adjacent(w, ExtNodeId::nuclear(m))) {
        out.attachment.emplace(m, w);
        link(w.node, m);
        break;
      }
    }
  }

  std::map<NodeId, NodeId> parent;
  std::set<NodeId> seen{inst.source()};
  std::deque<NodeId> queue{inst.source()};
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
  if (seen.size() != adj.size()) {
    throw InvalidInput("bridge maps to a disconnected graph on the base network");
  }
  out.tree = MulticastTree::from_parents(inst.source(), std::move(parent));

  for (NodeId u : tree_views(out.tree).multi_degree) {
    auto it = out.partition.find(u);
    if (it == out.partition.end()) {
      throw ProtocolError("internal tree node " + std::to_string(u) + " has no bridge satellites");
    }
    out.slots.emplace(u, it->second);
  }
  return out;
}

MulticastPlan plan_from_mapping(const BridgeMapping& mapping, const Network& net) {
  MulticastPlan plan{mapping.tree, {}};
  const auto views = tree_views(plan.tree);
  for (NodeId u : views.non_leaf) {
    if (plan.tree.degree(u) > 1) {
      plan.schedule.emplace(u, mapping.slots.at(u));
    } else {
      // Degree-one root: any slot of its only child works; take the smallest.
      const NodeId child = plan.tree.children(u).front();
      plan.schedule.emplace(u, SlotSet{net.active(child).front()});
    }
  }
  return plan;
}

MulticastPlan solve_memtcs(const Network& net, const MulticastInstance& inst,
                           const SolverConfig& cfg) {
  require_valid(net);
  require_compatible(net, inst);
  if (inst.terminals().size() == 1) return MulticastPlan{MulticastTree(inst.source()), {}};
  if (!terminals_connected(net, inst)) {
    throw Infeasible("terminals are not connected to the source");
  }
  const ExtendedGraph g(net);
  const auto bridge = find_msb(g, inst.terminals(), cfg);
  return plan_from_mapping(map_bridge_to_tree(bridge, g, inst), net);
}

}  // namespace dutycast
