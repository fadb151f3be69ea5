#include "dutycast/graph.hpp"

#include <algorithm>
#include <deque>

namespace dutycast {

UGraph UGraph::from_adjacency(std::vector<std::vector<int>> adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> reverse(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (int v : adj[u]) reverse.at(static_cast<std::size_t>(v)).push_back(static_cast<int>(u));
  }
  UGraph g;
  g.adj_ = std::move(adj);
  for (std::size_t u = 0; u < n; ++u) {
    auto& nb = g.adj_[u];
    nb.insert(nb.end(), reverse[u].begin(), reverse[u].end());
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    nb.erase(std::remove(nb.begin(), nb.end(), static_cast<int>(u)), nb.end());
  }
  return g;
}

std::size_t UGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj_) twice += nb.size();
  return twice / 2;
}

void UGraph::add_edge(int u, int v) {
  if (u == v) return;
  auto insert = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_.at(static_cast<std::size_t>(u)), v);
  insert(adj_.at(static_cast<std::size_t>(v)), u);
}

bool UGraph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> UGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (int v : adj_[u]) {
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    }
  }
  return out;
}

BfsResult bfs(const UGraph& g, const std::vector<int>& sources) {
  BfsResult r{std::vector<int>(g.size(), kUnreachable), std::vector<int>(g.size(), -1)};
  std::deque<int> queue;
  for (int s : sources) {
    if (r.dist[static_cast<std::size_t>(s)] == kUnreachable) {
      r.dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      auto& d = r.dist[static_cast<std::size_t>(v)];
      if (d == kUnreachable) {
        d = r.dist[static_cast<std::size_t>(u)] + 1;
        r.parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  return r;
}

}  // namespace dutycast
