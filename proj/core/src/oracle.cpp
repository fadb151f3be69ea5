#include "dutycast/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>

#include "dutycast/errors.hpp"

namespace dutycast {

namespace {

using Mask = std::uint64_t;

// Counts enumerated candidates against the budget.
class Meter {
 public:
  Meter(std::uint64_t limit, const char* what) : limit_(limit), what_(what) {}
  void tick() {
    if (++count_ > limit_) {
      throw BudgetExceeded(std::string(what_) + ": more than " + std::to_string(limit_) +
                           " candidates");
    }
  }

 private:
  std::uint64_t count_ = 0;
  std::uint64_t limit_;
  const char* what_;
};

Mask slot_mask(const SlotSet& slots) {
  Mask m = 0;
  for (Slot s : slots) m |= Mask{1} << static_cast<unsigned>(s - 1);
  return m;
}

void check_network_budget(const Network& net, const OracleBudget& budget) {
  require_valid(net);
  if (net.node_count() > budget.max_nodes || net.node_count() > 24) {
    throw BudgetExceeded("oracle: " + std::to_string(net.node_count()) + " nodes exceeds budget of " +
                         std::to_string(budget.max_nodes));
  }
  if (net.period() > budget.max_period || net.period() > 64) {
    throw BudgetExceeded("oracle: K = " + std::to_string(net.period()) + " exceeds budget of " +
                         std::to_string(budget.max_period));
  }
}

// Visits the k-subsets of {0..n-1} in lexicographic order until visit
// returns true. Returns whether it stopped early.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Minimum hitting set size of a collection of slot masks (every mask nonzero).
int min_hitting_size(const std::vector<Mask>& sets) {
  if (sets.empty()) return 0;
  Mask universe = 0;
  for (Mask s : sets) universe |= s;
  std::vector<Mask> bits;
  for (Mask u = universe; u != 0; u &= u - 1) bits.push_back(u & (~u + 1));
  const int n = static_cast<int>(bits.size());
  for (int k = 1; k <= n; ++k) {
    const bool found = for_each_combination(n, k, [&](const std::vector<int>& idx) {
      Mask pick = 0;
      for (int i : idx) pick |= bits[static_cast<std::size_t>(i)];
      return std::all_of(sets.begin(), sets.end(), [&](Mask s) { return (s & pick) != 0; });
    });
    if (found) return k;
  }
  return n;
}

// Memoized minimum hitting set size of {Gamma(v) : v in node mask}.
class HittingMemo {
 public:
  explicit HittingMemo(const Network& net) : memo_(std::size_t{1} << net.node_count(), -1) {
    for (std::size_t u = 0; u < net.node_count(); ++u) {
      gamma_.push_back(slot_mask(net.active(static_cast<NodeId>(u))));
    }
  }
  int operator()(std::uint32_t nodes) {
    int& slot = memo_[nodes];
    if (slot < 0) {
      std::vector<Mask> sets;
      for (std::uint32_t m = nodes; m != 0; m &= m - 1) {
        sets.push_back(gamma_[static_cast<std::size_t>(std::countr_zero(m))]);
      }
      slot = min_hitting_size(sets);
    }
    return slot;
  }

 private:
  std::vector<Mask> gamma_;
  std::vector<int> memo_;
};

struct TreeView {
  std::vector<Edge> edges;
  std::uint32_t nodes = 0;
  const std::vector<std::uint32_t>* adjacency = nullptr;  // per node tree neighbor mask
};

// Calls visit for every tree of net whose node set contains `required`:
// connected node supersets in increasing mask order, then the spanning trees
// of each induced subgraph by lexicographic edge selection.
void for_each_spanning_tree(const Network& net, std::uint32_t required, Meter& meter,
                            const std::function<void(const TreeView&)>& visit) {
  const auto n = static_cast<int>(net.node_count());
  std::vector<std::uint32_t> graph_adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : net.edges()) {
    graph_adj[static_cast<std::size_t>(u)] |= 1u << v;
    graph_adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  auto connected = [&](std::uint32_t set) {
    const std::uint32_t start = set & (~set + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= graph_adj[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  };

  const std::uint32_t optional = ((n == 32 ? 0u : (1u << n)) - 1u) & ~required;
  std::vector<std::uint32_t> optional_bits;
  for (std::uint32_t m = optional; m != 0; m &= m - 1) optional_bits.push_back(m & (~m + 1));

  std::vector<std::uint32_t> tree_adj(static_cast<std::size_t>(n), 0);
  TreeView view;
  view.adjacency = &tree_adj;

  const std::uint32_t combos = 1u << optional_bits.size();
  for (std::uint32_t pick = 0; pick < combos; ++pick) {
    std::uint32_t set = required;
    for (std::size_t b = 0; b < optional_bits.size(); ++b) {
      if (pick & (1u << b)) set |= optional_bits[b];
    }
    if (set == 0 || !connected(set)) continue;

    std::vector<Edge> candidates;
    for (const auto& e : net.edges()) {
      if ((set >> e.first & 1u) && (set >> e.second & 1u)) candidates.push_back(e);
    }
    std::sort(candidates.begin(), candidates.end());
    const auto need = static_cast<std::size_t>(std::popcount(set)) - 1;

    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
    std::fill(tree_adj.begin(), tree_adj.end(), 0);
    view.edges.clear();
    view.nodes = set;

    // Component labels are small enough to relabel by copy on each branch.
    std::function<void(std::size_t)> choose = [&](std::size_t next) {
      if (view.edges.size() == need) {
        meter.tick();
        visit(view);
        return;
      }
      if (candidates.size() - next < need - view.edges.size()) return;
      const auto [u, v] = candidates[next];
      const int cu = comp[static_cast<std::size_t>(u)];
      const int cv = comp[static_cast<std::size_t>(v)];
      if (cu != cv) {
        const auto saved = comp;
        for (auto& c : comp) {
          if (c == cv) c = cu;
        }
        view.edges.push_back({u, v});
        tree_adj[static_cast<std::size_t>(u)] |= 1u << v;
        tree_adj[static_cast<std::size_t>(v)] |= 1u << u;
        choose(next + 1);
        tree_adj[static_cast<std::size_t>(u)] &= ~(1u << v);
        tree_adj[static_cast<std::size_t>(v)] &= ~(1u << u);
        view.edges.pop_back();
        comp = saved;
      }
      choose(next + 1);
    };
    choose(0);
  }
}

std::uint32_t terminal_mask(const Network& net, const std::vector<NodeId>& terminals) {
  std::uint32_t mask = 0;
  for (NodeId m : terminals) {
    if (!net.has_node(m)) throw InvalidInput("terminal " + std::to_string(m) + " is not a node");
    mask |= 1u << m;
  }
  if (mask == 0) throw InvalidInput("terminal set is empty");
  return mask;
}

// Satellites with their terminal coverage and satellite adjacency as masks.
struct SatelliteMasks {
  std::vector<ExtNodeId> ids;
  std::vector<Mask> covers;     // bit i: terminals[i] adjacent
  std::vector<Mask> adjacency;  // bit j: ids[j] adjacent
  Mask all_terminals = 0;
};

SatelliteMasks satellite_masks(const ExtendedGraph& g, const std::vector<NodeId>& terminals) {
  SatelliteMasks s;
  s.ids = g.satellites();
  if (s.ids.size() > 64) {
    throw BudgetExceeded("oracle: " + std::to_string(s.ids.size()) + " satellites exceeds 64");
  }
  for (std::size_t t = 0; t < terminals.size(); ++t) s.all_terminals |= Mask{1} << t;
  for (const auto& w : s.ids) {
    Mask cov = 0;
    for (std::size_t t = 0; t < terminals.size(); ++t) {
      if (g.adjacent(w, ExtNodeId::nuclear(terminals[t]))) cov |= Mask{1} << t;
    }
    Mask adj = 0;
    for (std::size_t j = 0; j < s.ids.size(); ++j) {
      if (g.adjacent(w, s.ids[j])) adj |= Mask{1} << j;
    }
    s.covers.push_back(cov);
    s.adjacency.push_back(adj);
  }
  Mask reachable = 0;
  for (Mask c : s.covers) reachable |= c;
  if (reachable != s.all_terminals) {
    const auto missing = static_cast<std::size_t>(std::countr_zero(~reachable & s.all_terminals));
    throw Infeasible("terminal " + std::to_string(terminals[missing]) +
                     " has no satellite neighbor");
  }
  return s;
}

std::vector<NodeId> sorted_terminals(std::vector<NodeId> terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw InvalidInput("terminal set is empty");
  return terminals;
}

void check_graph_budget(const ExtendedGraph& g, const OracleBudget& budget) {
  check_network_budget(g.base(), budget);
}

}  // namespace

Rational harmonic(std::size_t n) {
  if (n == 0) throw InvalidInput("harmonic(0) is undefined");
  if (n > 40) throw InvalidInput("harmonic(n) overflows 64-bit rationals for n > 40");
  Rational sum(0);
  for (std::size_t k = 1; k <= n; ++k) sum += Rational(1, static_cast<std::int64_t>(k));
  return sum;
}

SlotSet exact_min_hitting_set(const std::vector<SlotSet>& collection, const OracleBudget& budget) {
  for (const auto& s : collection) {
    if (s.empty()) throw InvalidInput("hitting set collection contains an empty set");
  }
  SlotSet universe;
  for (const auto& s : collection) universe.insert(universe.end(), s.begin(), s.end());
  universe = make_slot_set(std::move(universe));
  if (universe.size() > budget.max_universe) {
    throw BudgetExceeded("oracle: hitting set universe of " + std::to_string(universe.size()) +
                         " exceeds budget of " + std::to_string(budget.max_universe));
  }
  if (collection.empty()) return {};

  std::vector<Mask> sets;
  for (const auto& s : collection) {
    Mask m = 0;
    for (Slot x : s) {
      const auto pos = std::lower_bound(universe.begin(), universe.end(), x) - universe.begin();
      m |= Mask{1} << pos;
    }
    sets.push_back(m);
  }
  Meter meter(budget.max_subsets, "exact_min_hitting_set");
  const int n = static_cast<int>(universe.size());
  SlotSet best;
  for (int k = 1; k <= n && best.empty(); ++k) {
    for_each_combination(n, k, [&](const std::vector<int>& idx) {
      meter.tick();
      Mask pick = 0;
      for (int i : idx) pick |= Mask{1} << i;
      if (!std::all_of(sets.begin(), sets.end(), [&](Mask s) { return (s & pick) != 0; })) {
        return false;
      }
      for (int i : idx) best.push_back(universe[static_cast<std::size_t>(i)]);
      return true;
    });
  }
  return best;
}

std::vector<ExtNodeId> exact_min_cover(const ExtendedGraph& g, const std::vector<NodeId>& terminal_list,
                                       const OracleBudget& budget) {
  check_graph_budget(g, budget);
  const auto terminals = sorted_terminals(terminal_list);
  const auto sats = satellite_masks(g, terminals);
  std::vector<std::size_t> useful;
  for (std::size_t i = 0; i < sats.ids.size(); ++i) {
    if (sats.covers[i] != 0) useful.push_back(i);
  }
  Meter meter(budget.max_subsets, "exact_min_cover");
  std::vector<ExtNodeId> best;
  const auto n = static_cast<int>(useful.size());
  for (int k = 1; k <= n && best.empty(); ++k) {
    for_each_combination(n, k, [&](const std::vector<int>& idx) {
      meter.tick();
      Mask cov = 0;
      for (int i : idx) cov |= sats.covers[useful[static_cast<std::size_t>(i)]];
      if (cov != sats.all_terminals) return false;
      for (int i : idx) best.push_back(sats.ids[useful[static_cast<std::size_t>(i)]]);
      return true;
    });
  }
  return best;
}

SatelliteBridge exact_msb(const ExtendedGraph& g, const std::vector<NodeId>& terminal_list,
                          const OracleBudget& budget) {
  check_graph_budget(g, budget);
  const auto terminals = sorted_terminals(terminal_list);
  const auto sats = satellite_masks(g, terminals);
  const auto n = static_cast<int>(sats.ids.size());

  auto connected = [&](Mask set) {
    Mask seen = set & (~set + 1), frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        next |= sats.adjacency[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  };

  Meter meter(budget.max_subsets, "exact_msb");
  Mask found = 0;
  for (int k = 1; k <= n && found == 0; ++k) {
    for_each_combination(n, k, [&](const std::vector<int>& idx) {
      meter.tick();
      Mask cov = 0, set = 0;
      for (int i : idx) {
        cov |= sats.covers[static_cast<std::size_t>(i)];
        set |= Mask{1} << i;
      }
      if (cov != sats.all_terminals || !connected(set)) return false;
      found = set;
      return true;
    });
  }
  if (found == 0) throw Infeasible("no satellite bridge covers the terminals");

  // BFS spanning tree from the smallest member.
  SatelliteBridge sb;
  for (Mask m = found; m != 0; m &= m - 1) {
    sb.nodes.push_back(sats.ids[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  const int start = std::countr_zero(found);
  Mask seen = Mask{1} << start;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (Mask nb = sats.adjacency[static_cast<std::size_t>(u)] & found & ~seen; nb != 0; nb &= nb - 1) {
      const int v = std::countr_zero(nb);
      seen |= Mask{1} << v;
      sb.edges.emplace_back(sats.ids[static_cast<std::size_t>(std::min(u, v))],
                            sats.ids[static_cast<std::size_t>(std::max(u, v))]);
      queue.push_back(v);
    }
  }
  std::sort(sb.edges.begin(), sb.edges.end());
  return sb;
}

std::int64_t xi(const MulticastTree& tree, const Network& net, const OracleBudget& budget) {
  std::int64_t total = 0;
  for (NodeId u : tree_views(tree).multi_degree) {
    std::vector<SlotSet> collection;
    for (NodeId v : tree.neighbors(u)) collection.push_back(net.active(v));
    total += static_cast<std::int64_t>(exact_min_hitting_set(collection, budget).size());
  }
  return total;
}

MistResult exact_mist_xi(const Network& net, const std::vector<NodeId>& terminal_list,
                         const OracleBudget& budget) {
  check_network_budget(net, budget);
  const auto terminals = sorted_terminals(terminal_list);
  const auto required = terminal_mask(net, terminals);
  HittingMemo mhs(net);
  Meter meter(budget.max_subsets, "exact_mist_xi");

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Edge> witness;
  for_each_spanning_tree(net, required, meter, [&](const TreeView& t) {
    std::int64_t value = 0;
    for (std::uint32_t m = t.nodes; m != 0; m &= m - 1) {
      const auto nb = (*t.adjacency)[static_cast<std::size_t>(std::countr_zero(m))];
      if (std::popcount(nb) > 1) value += mhs(nb);
    }
    if (value < best) {
      best = value;
      witness = t.edges;
    }
  });
  if (best == std::numeric_limits<std::int64_t>::max()) {
    throw Infeasible("no tree of the network spans the terminals");
  }
  return MistResult{best, MulticastTree::from_edges(terminals.front(), witness)};
}

MulticastPlan exact_memtcs(const Network& net, const MulticastInstance& inst,
                           const EnergyModel& model, const OracleBudget& budget) {
  check_network_budget(net, budget);
  const auto required = terminal_mask(net, inst.terminals());
  HittingMemo mhs(net);
  Meter meter(budget.max_subsets, "exact_memtcs");
  const auto root = static_cast<std::size_t>(inst.source());

  Energy best = std::numeric_limits<Energy>::max();
  std::vector<Edge> witness;
  std::vector<std::uint32_t> children(net.node_count());
  for_each_spanning_tree(net, required, meter, [&](const TreeView& t) {
    // Orient away from the source.
    std::fill(children.begin(), children.end(), 0);
    std::uint32_t seen = 1u << root, frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(f));
        children[u] = (*t.adjacency)[u] & ~seen;
        next |= children[u];
      }
      seen |= next;
      frontier = next;
    }
    Energy sends = 0;
    for (std::uint32_t m = t.nodes; m != 0; m &= m - 1) {
      const auto c = children[static_cast<std::size_t>(std::countr_zero(m))];
      if (c != 0) sends += mhs(c);
    }
    const Energy cost = sends * model.send + (std::popcount(t.nodes) - 1) * model.receive;
    if (cost < best) {
      best = cost;
      witness = t.edges;
    }
  });
  if (best == std::numeric_limits<Energy>::max()) {
    throw Infeasible("no tree of the network spans the terminals");
  }

  MulticastPlan plan{MulticastTree::from_edges(inst.source(), witness), {}};
  for (NodeId u : tree_views(plan.tree).non_leaf) {
    std::vector<SlotSet> collection;
    for (NodeId v : plan.tree.children(u)) collection.push_back(net.active(v));
    plan.schedule.emplace(u, exact_min_hitting_set(collection, budget));
  }
  return plan;
}

StarReduction star_reduction_instance(const std::vector<SlotSet>& collection) {
  if (collection.empty()) throw InvalidInput("hitting set instance has no subsets");
  Slot p = 0;
  for (const auto& subset : collection) {
    if (subset.empty()) throw InvalidInput("hitting set instance contains an empty subset");
    if (subset.front() < 1) throw InvalidInput("hitting set elements are numbered from 1");
    p = std::max(p, subset.back());
  }
  std::vector<DutySchedule> schedules;
  SlotSet hub(static_cast<std::size_t>(p));
  for (Slot i = 1; i <= p; ++i) hub[static_cast<std::size_t>(i - 1)] = i;
  schedules.emplace_back(hub);
  std::vector<Edge> edges;
  std::vector<NodeId> terminals;
  for (std::size_t j = 0; j < collection.size(); ++j) {
    schedules.emplace_back(collection[j]);
    edges.emplace_back(0, static_cast<NodeId>(j + 1));
    terminals.push_back(static_cast<NodeId>(j + 1));
  }
  return StarReduction{Network(p, std::move(schedules), std::move(edges)),
                       MulticastInstance(0, std::move(terminals)), EnergyModel{1, 0}};
}

std::vector<SlotSet> decode_star_reduction(const Network& star) {
  std::vector<SlotSet> out;
  for (std::size_t j = 1; j < star.node_count(); ++j) out.push_back(star.active(static_cast<NodeId>(j)));
  return out;
}

}  // namespace dutycast
