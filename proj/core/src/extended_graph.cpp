#include "dutycast/extended_graph.hpp"

#include <algorithm>
#include <sstream>

#include "dutycast/errors.hpp"

namespace dutycast {

std::string to_string(const ExtNodeId& id) {
  if (id.is_nuclear()) return std::to_string(id.node);
  return "λ(" + std::to_string(id.node) + "," + std::to_string(id.slot) + ")";
}

ExtendedGraph::ExtendedGraph(const Network& net)
    : base_(&net), satellite_slots_(net.node_count()), offset_(net.node_count() + 1, 0) {
  const std::size_t n = net.node_count();
  for (std::size_t u = 0; u < n; ++u) {
    SlotSet psi;
    for (NodeId v : net.neighbors(static_cast<NodeId>(u))) {
      const auto& gamma = net.active(v);
      psi.insert(psi.end(), gamma.begin(), gamma.end());
    }
    satellite_slots_[u] = make_slot_set(std::move(psi));
    offset_[u + 1] = offset_[u] + 1 + static_cast<int>(satellite_slots_[u].size());
  }

  ids_.reserve(static_cast<std::size_t>(offset_[n]));
  for (std::size_t u = 0; u < n; ++u) {
    ids_.push_back(ExtNodeId::nuclear(static_cast<NodeId>(u)));
    for (Slot i : satellite_slots_[u]) ids_.push_back(ExtNodeId::satellite(static_cast<NodeId>(u), i));
  }

  std::vector<std::vector<int>> adj(ids_.size());
  // Psi(u) plus u is a clique.
  for (std::size_t u = 0; u < n; ++u) {
    for (int a = offset_[u]; a < offset_[u + 1]; ++a) {
      for (int b = a + 1; b < offset_[u + 1]; ++b) adj[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  // Three edge families per network edge.
  for (const auto& [u, v] : net.edges()) {
    if (u == v || !net.has_node(u) || !net.has_node(v)) continue;
    const int nuc_u = offset_[static_cast<std::size_t>(u)];
    const int nuc_v = offset_[static_cast<std::size_t>(v)];
    for (Slot i : net.active(v)) {
      const int sat_ui = index_of(ExtNodeId::satellite(u, i));
      adj[static_cast<std::size_t>(sat_ui)].push_back(nuc_v);
      for (Slot j : net.active(u)) {
        adj[static_cast<std::size_t>(sat_ui)].push_back(index_of(ExtNodeId::satellite(v, j)));
      }
    }
    for (Slot j : net.active(u)) {
      adj[static_cast<std::size_t>(nuc_u)].push_back(index_of(ExtNodeId::satellite(v, j)));
    }
  }
  flat_ = UGraph::from_adjacency(std::move(adj));
  edge_count_ = flat_.edge_count();
}

bool ExtendedGraph::has_node(const ExtNodeId& id) const {
  if (!base_->has_node(id.node)) return false;
  return id.is_nuclear() || contains(satellite_slots(id.node), id.slot);
}

int ExtendedGraph::index_of(const ExtNodeId& id) const {
  if (!base_->has_node(id.node)) {
    throw InvalidInput("extended graph has no node " + to_string(id));
  }
  const auto u = static_cast<std::size_t>(id.node);
  if (id.is_nuclear()) return offset_[u];
  const auto& psi = satellite_slots_[u];
  auto it = std::lower_bound(psi.begin(), psi.end(), id.slot);
  if (it == psi.end() || *it != id.slot) {
    throw InvalidInput("extended graph has no node " + to_string(id));
  }
  return offset_[u] + 1 + static_cast<int>(it - psi.begin());
}

std::vector<ExtNodeId> ExtendedGraph::neighbors(const ExtNodeId& id) const {
  std::vector<ExtNodeId> out;
  for (int w : flat_.neighbors(index_of(id))) out.push_back(ids_[static_cast<std::size_t>(w)]);
  return out;
}

bool ExtendedGraph::adjacent(const ExtNodeId& a, const ExtNodeId& b) const {
  if (!has_node(a) || !has_node(b)) return false;
  return flat_.has_edge(index_of(a), index_of(b));
}

std::vector<ExtNodeId> ExtendedGraph::satellites() const {
  std::vector<ExtNodeId> out;
  out.reserve(satellite_count());
  for (const auto& id : ids_) {
    if (id.is_satellite()) out.push_back(id);
  }
  return out;
}

std::vector<std::pair<ExtNodeId, ExtNodeId>> ExtendedGraph::edge_list() const {
  std::vector<std::pair<ExtNodeId, ExtNodeId>> out;
  out.reserve(edge_count_);
  for (const auto& [a, b] : flat_.edges()) {
    out.emplace_back(ids_[static_cast<std::size_t>(a)], ids_[static_cast<std::size_t>(b)]);
  }
  return out;
}

std::vector<NodeId> satellite_coverage(const ExtendedGraph& g, const ExtNodeId& w) {
  if (w.is_nuclear()) {
    throw InvalidInput("satellite_coverage expects a satellite, got nuclear node " + to_string(w));
  }
  std::vector<NodeId> out;
  for (int x : g.flat().neighbors(g.index_of(w))) {
    const auto& id = g.id_at(x);
    if (id.is_nuclear()) out.push_back(id.node);
  }
  return out;
}

int SatelliteSubgraph::index_of(const ExtNodeId& id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) {
    throw InvalidInput("satellite subgraph has no node " + to_string(id));
  }
  return static_cast<int>(it - ids.begin());
}

SatelliteSubgraph induced_satellite_subgraph(const ExtendedGraph& g) {
  SatelliteSubgraph sub;
  std::vector<int> local(g.node_count(), -1);
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    if (g.ids()[x].is_satellite()) {
      local[x] = static_cast<int>(sub.ids.size());
      sub.ids.push_back(g.ids()[x]);
    }
  }
  std::vector<std::vector<int>> adj(sub.ids.size());
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    if (local[x] < 0) continue;
    for (int y : g.flat().neighbors(static_cast<int>(x))) {
      if (local[static_cast<std::size_t>(y)] >= 0) {
        adj[static_cast<std::size_t>(local[x])].push_back(local[static_cast<std::size_t>(y)]);
      }
    }
  }
  sub.graph = UGraph::from_adjacency(std::move(adj));
  return sub;
}

ExtendedGraphBounds size_bounds(const Network& net) {
  const auto k = static_cast<std::size_t>(std::max(net.period(), 0));
  const auto v = net.node_count();
  const auto e = net.edge_count();
  return {(k + 1) * v, (k + 1) * k / 2 * v + 3 * k * k * e};
}

std::string dump_edges(const ExtendedGraph& g) {
  std::ostringstream out;
  for (const auto& [a, b] : g.edge_list()) out << to_string(a) << " -- " << to_string(b) << '\n';
  return out.str();
}

}  // namespace dutycast
