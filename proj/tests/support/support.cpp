#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace testsupport {

int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Network random_network(Rng& rng, const NetworkShape& shape) {
  const int n = uniform_int(rng, shape.min_nodes, shape.max_nodes);
  const int k = uniform_int(rng, shape.min_period, shape.max_period);
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) {
    if (!shape.connected && coin(rng, 0.2)) continue;
    const int u = uniform_int(rng, 0, v - 1);
    edges.insert({u, v});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng, shape.extra_edge_prob)) edges.insert({u, v});
    }
  }
  std::vector<dutycast::DutySchedule> schedules;
  for (int u = 0; u < n; ++u) {
    std::vector<Slot> slots;
    for (Slot s = 1; s <= k; ++s) {
      if (coin(rng, shape.slot_prob)) slots.push_back(s);
    }
    if (slots.empty()) slots.push_back(uniform_int(rng, 1, k));
    schedules.emplace_back(slots);
  }
  // Relabel nodes so the spanning tree is not always rooted at 0.
  std::vector<NodeId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> relabeled;
  for (auto [u, v] : edges) relabeled.emplace_back(perm[u], perm[v]);
  std::vector<dutycast::DutySchedule> permuted(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) permuted[static_cast<std::size_t>(perm[u])] = schedules[u];
  return Network(k, std::move(permuted), std::move(relabeled));
}

MulticastInstance random_instance(Rng& rng, const Network& net, double fraction,
                                  std::size_t min_terminals) {
  const int n = static_cast<int>(net.node_count());
  const NodeId s = uniform_int(rng, 0, n - 1);
  std::vector<NodeId> component;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<NodeId> queue{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    component.push_back(u);
    for (NodeId v : net.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        queue.push_back(v);
      }
    }
  }
  std::shuffle(component.begin() + 1, component.end(), rng);
  auto m = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(component.size())));
  m = std::clamp(std::max(m, min_terminals), std::size_t{1}, component.size());
  return MulticastInstance(s, std::vector<NodeId>(component.begin(), component.begin() + static_cast<std::ptrdiff_t>(m)));
}

std::vector<SlotSet> random_collection(Rng& rng, int max_sets, int universe) {
  const int sets = uniform_int(rng, 1, max_sets);
  std::vector<SlotSet> out;
  for (int i = 0; i < sets; ++i) {
    SlotSet s;
    for (Slot e = 1; e <= universe; ++e) {
      if (coin(rng, 0.35)) s.push_back(e);
    }
    if (s.empty()) s.push_back(uniform_int(rng, 1, universe));
    out.push_back(s);
  }
  return out;
}

std::size_t brute_min_hitting_size(const std::vector<SlotSet>& collection, int universe) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : collection) {
    std::uint32_t m = 0;
    for (Slot e : s) m |= 1u << (e - 1);
    masks.push_back(m);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t h = 0; h < (1u << universe); ++h) {
    bool ok = true;
    for (auto m : masks) ok = ok && (m & h) != 0;
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(h)));
  }
  return best;
}

namespace {

bool connected_mask(const dutycast::UGraph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  const int start = __builtin_ctz(mask);
  std::uint32_t seen = 1u << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if ((mask >> v & 1u) && !(seen >> v & 1u)) {
        seen |= 1u << v;
        stack.push_back(v);
      }
    }
  }
  return seen == mask;
}

}  // namespace

int brute_steiner_edges(const dutycast::UGraph& g, const std::vector<int>& terminals) {
  const int n = static_cast<int>(g.size());
  std::uint32_t req = 0;
  for (int t : terminals) req |= 1u << t;
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if ((s & req) != req) continue;
    const int size = __builtin_popcount(s);
    if (size - 1 >= best) continue;
    if (connected_mask(g, s)) best = size - 1;
  }
  return best == std::numeric_limits<int>::max() ? -1 : best;
}

namespace {

SlotSet neighbor_slot_union(const Network& net, NodeId u) {
  std::set<Slot> slots;
  for (NodeId v : net.neighbors(u)) {
    for (Slot s : net.active(v)) slots.insert(s);
  }
  return {slots.begin(), slots.end()};
}

}  // namespace

std::set<ExtNodeId> derive_extended_nodes(const Network& net) {
  std::set<ExtNodeId> nodes;
  for (NodeId u = 0; u < static_cast<NodeId>(net.node_count()); ++u) {
    nodes.insert(ExtNodeId::nuclear(u));
    for (Slot i : neighbor_slot_union(net, u)) nodes.insert(ExtNodeId::satellite(u, i));
  }
  return nodes;
}

std::set<std::pair<ExtNodeId, ExtNodeId>> derive_extended_edges(const Network& net) {
  std::set<std::pair<ExtNodeId, ExtNodeId>> edges;
  auto add = [&](ExtNodeId a, ExtNodeId b) { edges.insert(a < b ? std::pair{a, b} : std::pair{b, a}); };
  for (NodeId u = 0; u < static_cast<NodeId>(net.node_count()); ++u) {
    std::vector<ExtNodeId> clique{ExtNodeId::nuclear(u)};
    for (Slot i : neighbor_slot_union(net, u)) clique.push_back(ExtNodeId::satellite(u, i));
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) add(clique[a], clique[b]);
    }
  }
  for (auto [u, v] : net.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      for (Slot i : net.active(y)) {
        for (Slot j : net.active(x)) {
          add(ExtNodeId::satellite(x, i), ExtNodeId::satellite(y, j));
          add(ExtNodeId::satellite(x, i), ExtNodeId::nuclear(y));
          add(ExtNodeId::nuclear(x), ExtNodeId::satellite(y, j));
        }
      }
    }
  }
  return edges;
}

std::size_t brute_min_cover(const Network& net, const std::vector<NodeId>& terminals) {
  // Satellite (u, i) covers u and every neighbor v of u with i in Gamma(v).
  std::vector<std::uint32_t> covers;
  std::map<NodeId, int> bit;
  for (NodeId t : terminals) bit.emplace(t, static_cast<int>(bit.size()));
  for (NodeId u = 0; u < static_cast<NodeId>(net.node_count()); ++u) {
    for (Slot i : neighbor_slot_union(net, u)) {
      std::uint32_t c = 0;
      if (bit.contains(u)) c |= 1u << bit[u];
      for (NodeId v : net.neighbors(u)) {
        if (bit.contains(v) && dutycast::contains(net.active(v), i)) c |= 1u << bit[v];
      }
      covers.push_back(c);
    }
  }
  const std::uint32_t all = (1u << bit.size()) - 1;
  // Breadth-first over reachable coverage masks.
  std::vector<int> dist(all + 1, -1);
  dist[0] = 0;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    if (m == all) return static_cast<std::size_t>(dist[m]);
    for (auto c : covers) {
      auto next = m | c;
      if (dist[next] < 0) {
        dist[next] = dist[m] + 1;
        queue.push_back(next);
      }
    }
  }
  return std::numeric_limits<std::size_t>::max();
}

dutycast::Energy brute_min_energy(const Network& net, const MulticastInstance& inst,
                                  const dutycast::EnergyModel& model) {
  const auto& edges = net.edges();
  const auto n = net.node_count();
  const auto m = edges.size();
  if (inst.terminals().size() == 1) return 0;
  dutycast::Energy best = std::numeric_limits<dutycast::Energy>::max();
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
    // Union-find acyclicity and node set.
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      return x;
    };
    std::set<NodeId> nodes;
    std::vector<std::vector<NodeId>> adj(n);
    bool acyclic = true;
    std::size_t count = 0;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!(sub >> e & 1u)) continue;
      auto [u, v] = edges[e];
      int a = find(u), b = find(v);
      if (a == b) acyclic = false;
      root[static_cast<std::size_t>(a)] = b;
      nodes.insert(u);
      nodes.insert(v);
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
      ++count;
    }
    if (!acyclic || count + 1 != nodes.size()) continue;
    bool spans = true;
    for (NodeId t : inst.terminals()) spans = spans && nodes.contains(t);
    if (!spans) continue;
    // Root at the source; cost each non-leaf by its children's schedules.
    dutycast::Energy sends = 0;
    std::vector<NodeId> stack{inst.source()};
    std::vector<NodeId> parent(n, -1);
    std::vector<bool> seen(n, false);
    seen[static_cast<std::size_t>(inst.source())] = true;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      std::vector<SlotSet> kids;
      for (NodeId v : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        kids.push_back(net.active(v));
        stack.push_back(v);
      }
      if (!kids.empty()) sends += static_cast<dutycast::Energy>(brute_min_hitting_size(kids, net.period()));
    }
    const auto energy = sends * model.send + static_cast<dutycast::Energy>(count) * model.receive;
    best = std::min(best, energy);
  }
  return best;
}

double harmonic_double(std::size_t n) {
  double h = 0;
  for (std::size_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

bool schedule_hits_children(const dutycast::MulticastTree& tree,
                            const dutycast::TransmissionSchedule& schedule, const Network& net) {
  for (const auto& [child, parent] : tree.parents()) {
    auto it = schedule.find(parent);
    if (it == schedule.end()) return false;
    bool hit = false;
    for (Slot s : it->second) hit = hit || dutycast::contains(net.active(child), s);
    if (!hit) return false;
  }
  return true;
}

}  // namespace testsupport
