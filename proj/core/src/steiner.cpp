#include "dutycast/steiner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "dutycast/errors.hpp"

namespace dutycast {

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

void add_undirected(EdgeSet& edges, int a, int b) {
  edges.insert({std::min(a, b), std::max(a, b)});
}

// Adds the path from `from` back along `parent` until `to` is reached.
void add_path(EdgeSet& edges, const std::vector<int>& parent, int from, int to) {
  int cur = from;
  while (cur != to) {
    const int p = parent[static_cast<std::size_t>(cur)];
    add_undirected(edges, cur, p);
    cur = p;
  }
}

EdgeSet kmb_union(const UGraph& g, const std::vector<int>& terminals) {
  const std::size_t k = terminals.size();
  std::vector<BfsResult> trees;
  trees.reserve(k);
  for (int t : terminals) trees.push_back(bfs(g, {t}));
  for (std::size_t j = 1; j < k; ++j) {
    if (trees[0].dist[static_cast<std::size_t>(terminals[j])] == kUnreachable) {
      throw Infeasible("Steiner terminals " + std::to_string(terminals[0]) + " and " +
                       std::to_string(terminals[j]) + " are not connected");
    }
  }

  // Prim on the metric closure.
  std::vector<char> in_tree(k, 0);
  std::vector<int> best(k), from(k, 0);
  in_tree[0] = 1;
  for (std::size_t j = 0; j < k; ++j) best[j] = trees[0].dist[static_cast<std::size_t>(terminals[j])];
  EdgeSet edges;
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (!in_tree[j] && (pick == k || best[j] < best[pick])) pick = j;
    }
    in_tree[pick] = 1;
    const auto src = static_cast<std::size_t>(from[pick]);
    add_path(edges, trees[src].parent, terminals[pick], terminals[src]);
    for (std::size_t j = 0; j < k; ++j) {
      const int d = trees[pick].dist[static_cast<std::size_t>(terminals[j])];
      if (!in_tree[j] && d < best[j]) {
        best[j] = d;
        from[j] = static_cast<int>(pick);
      }
    }
  }
  return edges;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

EdgeSet mehlhorn_union(const UGraph& g, const std::vector<int>& terminals) {
  const std::size_t n = g.size();
  std::vector<int> dist(n, kUnreachable), pred(n, -1), region(n, -1);
  std::deque<int> queue;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const auto t = static_cast<std::size_t>(terminals[i]);
    dist[t] = 0;
    region[t] = static_cast<int>(i);
    queue.push_back(terminals[i]);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      const auto vi = static_cast<std::size_t>(v);
      if (dist[vi] == kUnreachable) {
        dist[vi] = dist[static_cast<std::size_t>(u)] + 1;
        pred[vi] = u;
        region[vi] = region[static_cast<std::size_t>(u)];
        queue.push_back(v);
      }
    }
  }

  // Cheapest bridging graph edge per pair of Voronoi regions.
  std::map<std::pair<int, int>, std::tuple<int, int, int>> bridge;  // -> (weight, u, v)
  for (const auto& [u, v] : g.edges()) {
    const int ru = region[static_cast<std::size_t>(u)];
    const int rv = region[static_cast<std::size_t>(v)];
    if (ru < 0 || rv < 0 || ru == rv) continue;
    const int w = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
    const auto key = std::make_pair(std::min(ru, rv), std::max(ru, rv));
    const auto cand = std::make_tuple(w, u, v);
    auto it = bridge.find(key);
    if (it == bridge.end() || cand < it->second) bridge[key] = cand;
  }
  std::vector<std::tuple<int, int, int, int, int>> order;  // (w, ra, rb, u, v)
  for (const auto& [key, val] : bridge) {
    order.emplace_back(std::get<0>(val), key.first, key.second, std::get<1>(val), std::get<2>(val));
  }
  std::sort(order.begin(), order.end());

  DisjointSets sets(terminals.size());
  EdgeSet edges;
  std::size_t joined = 1;
  for (const auto& [w, ra, rb, u, v] : order) {
    if (!sets.unite(ra, rb)) continue;
    ++joined;
    add_undirected(edges, u, v);
    add_path(edges, pred, u, terminals[static_cast<std::size_t>(region[static_cast<std::size_t>(u)])]);
    add_path(edges, pred, v, terminals[static_cast<std::size_t>(region[static_cast<std::size_t>(v)])]);
  }
  if (joined != terminals.size()) {
    throw Infeasible("Steiner terminals are not in one connected component");
  }
  return edges;
}

// Spanning tree of the union subgraph, then prune non-terminal leaves.
SteinerTree finish(const EdgeSet& union_edges, const std::vector<int>& terminals) {
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : union_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [_, nb] : adj) std::sort(nb.begin(), nb.end());

  std::map<int, std::set<int>> tree;
  tree[terminals.front()];
  std::deque<int> queue{terminals.front()};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!tree.contains(v)) {
        tree[v].insert(u);
        tree[u].insert(v);
        queue.push_back(v);
      }
    }
  }

  const std::set<int> keep(terminals.begin(), terminals.end());
  std::deque<int> leaves;
  for (const auto& [u, nb] : tree) {
    if (nb.size() <= 1 && !keep.contains(u)) leaves.push_back(u);
  }
  while (!leaves.empty()) {
    const int u = leaves.front();
    leaves.pop_front();
    auto it = tree.find(u);
    if (it == tree.end()) continue;
    for (int v : it->second) {
      auto& nb = tree[v];
      nb.erase(u);
      if (nb.size() <= 1 && !keep.contains(v)) leaves.push_back(v);
    }
    tree.erase(it);
  }

  SteinerTree out;
  for (const auto& [u, nb] : tree) {
    out.nodes.push_back(u);
    for (int v : nb) {
      if (u < v) out.edges.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace

SteinerTree steiner_tree_approx(const UGraph& g, std::vector<int> terminals,
                                const SolverConfig& cfg) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw InvalidInput("Steiner tree needs at least one terminal");
  for (int t : terminals) {
    if (t < 0 || static_cast<std::size_t>(t) >= g.size()) {
      throw InvalidInput("Steiner terminal " + std::to_string(t) + " is not a graph node");
    }
  }
  if (terminals.size() == 1) return SteinerTree{{terminals.front()}, {}};

  const EdgeSet edges = cfg.steiner == SteinerAlgorithm::kKmb ? kmb_union(g, terminals)
                                                              : mehlhorn_union(g, terminals);
  return finish(edges, terminals);
}

}  // namespace dutycast
