#include "dutycast/distributed.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dutycast/errors.hpp"
#include "dutycast/solver.hpp"

namespace dutycast {

namespace {

constexpr int kStepsPerRound = 5;

// Decides which transmissions count as messages.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual void send(int round, MessageKind kind, int from, int to) = 0;
  virtual void end_step() {}
  virtual std::uint64_t step_slots() const = 0;

  SimResult result;
};

// Every transmission on the extended graph is a message.
class ExtendedTransport final : public Transport {
 public:
  void send(int round, MessageKind kind, int from, int to) override {
    ++result.messages;
    ++result.messages_by_kind[kind];
    result.log.push_back({round, kind, from, to});
  }
  std::uint64_t step_slots() const override { return 1; }
};

// Pseudo nodes hosted by nuclear nodes: only transmissions that reach another
// nuclear node go on the air, serialized per host within a delta-slot step.
class NuclearTransport final : public Transport {
 public:
  NuclearTransport(const ExtendedGraph& g, int delta)
      : g_(g), delta_(delta), sent_(g.base().node_count(), 0) {}

  void send(int round, MessageKind kind, int from, int to) override {
    const NodeId host = g_.id_at(from).node;
    bool remote = false;
    if (to == kBroadcast) {
      for (int w : g_.flat().neighbors(from)) remote = remote || g_.id_at(w).node != host;
    } else {
      remote = g_.id_at(to).node != host;
    }
    if (!remote) return;
    if (++sent_[static_cast<std::size_t>(host)] > static_cast<std::uint64_t>(delta_)) {
      throw ProtocolError("nuclear node " + std::to_string(host) +
                          " cannot serialize its pseudo-node traffic within delta slots");
    }
    ++result.messages;
    ++result.messages_by_kind[kind];
    result.log.push_back({round, kind, from, to});
  }
  void end_step() override { std::fill(sent_.begin(), sent_.end(), 0); }
  std::uint64_t step_slots() const override { return static_cast<std::uint64_t>(delta_); }

 private:
  const ExtendedGraph& g_;
  int delta_;
  std::vector<std::uint64_t> sent_;
};

SimResult run_protocol(const ExtendedGraph& g, const std::vector<NodeId>& terminal_list,
                       Transport& transport) {
  std::vector<NodeId> terminals = terminal_list;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw InvalidInput("terminal set is empty");

  const std::size_t n = g.node_count();
  const UGraph& adj = g.flat();
  std::vector<NodeColor> color(n, NodeColor::kWhite);
  for (NodeId m : terminals) {
    if (!g.base().has_node(m)) throw InvalidInput("terminal " + std::to_string(m) + " is not a node");
    const int x = g.index_of(ExtNodeId::nuclear(m));
    if (adj.neighbors(x).empty()) {
      throw Infeasible("terminal " + std::to_string(m) + " has no satellite neighbor");
    }
    color[static_cast<std::size_t>(x)] = NodeColor::kRed;
  }
  std::vector<std::set<int>> rnb(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (color[x] != NodeColor::kWhite) continue;
    for (int w : adj.neighbors(static_cast<int>(x))) {
      if (color[static_cast<std::size_t>(w)] == NodeColor::kRed) rnb[x].insert(w);
    }
  }

  std::size_t red = terminals.size();
  int round = 0;
  while (red > 0) {
    ++round;
    if (round > static_cast<int>(terminals.size())) {
      throw ProtocolError("distributed cover did not finish within |M| rounds");
    }

    // 1. Elections.
    std::vector<std::pair<std::size_t, int>> best(n, {0, -1});  // per red: (|rnb|, id)
    for (std::size_t x = 0; x < n; ++x) {
      if (color[x] != NodeColor::kWhite || rnb[x].empty()) continue;
      transport.send(round, MessageKind::kElection, static_cast<int>(x), kBroadcast);
      const std::pair<std::size_t, int> offer{rnb[x].size(), static_cast<int>(x)};
      for (int r : rnb[x]) best[static_cast<std::size_t>(r)] = std::max(best[static_cast<std::size_t>(r)], offer);
    }
    transport.end_step();

    // 2. Each red node votes for its best candidate.
    std::vector<std::size_t> votes(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (color[r] != NodeColor::kRed) continue;
      const int winner = best[r].second;
      if (winner < 0) throw ProtocolError("red node received no election message");
      transport.send(round, MessageKind::kYouWin, static_cast<int>(r), winner);
      ++votes[static_cast<std::size_t>(winner)];
    }
    transport.end_step();

    // 3. Unanimous winners become dominators.
    std::vector<int> dominators;
    for (std::size_t x = 0; x < n; ++x) {
      if (color[x] == NodeColor::kWhite && !rnb[x].empty() && votes[x] == rnb[x].size()) {
        color[x] = NodeColor::kBlue;
        dominators.push_back(static_cast<int>(x));
        transport.send(round, MessageKind::kDominator, static_cast<int>(x), kBroadcast);
      }
    }
    if (dominators.empty()) throw ProtocolError("no dominator elected in round " + std::to_string(round));
    transport.end_step();

    // 4. Covered red nodes turn green.
    std::vector<int> dominated;
    for (int x : dominators) {
      for (int r : adj.neighbors(x)) {
        if (color[static_cast<std::size_t>(r)] == NodeColor::kRed) {
          color[static_cast<std::size_t>(r)] = NodeColor::kGreen;
          dominated.push_back(r);
          --red;
        }
      }
    }
    std::sort(dominated.begin(), dominated.end());
    for (int r : dominated) transport.send(round, MessageKind::kDominated, r, kBroadcast);
    transport.end_step();

    // 5. White nodes forget covered terminals.
    for (int r : dominated) {
      for (int x : adj.neighbors(r)) {
        if (color[static_cast<std::size_t>(x)] == NodeColor::kWhite) rnb[static_cast<std::size_t>(x)].erase(r);
      }
    }
    transport.end_step();
  }

  SimResult result = std::move(transport.result);
  result.rounds = round;
  result.time_slots = static_cast<std::uint64_t>(round) * kStepsPerRound * transport.step_slots();
  for (std::size_t x = 0; x < n; ++x) {
    if (color[x] == NodeColor::kBlue) result.cover.push_back(g.ids()[x]);
  }
  return result;
}

int component_diameter(const Network& net, NodeId source) {
  auto eccentricity = [&](NodeId start, std::vector<NodeId>* members) {
    std::vector<int> dist(net.node_count(), -1);
    std::deque<NodeId> queue{start};
    dist[static_cast<std::size_t>(start)] = 0;
    int far = 0;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      if (members != nullptr) members->push_back(u);
      far = std::max(far, dist[static_cast<std::size_t>(u)]);
      for (NodeId v : net.neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    return far;
  };
  std::vector<NodeId> members;
  int diameter = eccentricity(source, &members);
  for (NodeId u : members) diameter = std::max(diameter, eccentricity(u, nullptr));
  return diameter;
}

}  // namespace

std::string to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::kElection: return "election";
    case MessageKind::kYouWin: return "you_win";
    case MessageKind::kDominator: return "dominator";
    case MessageKind::kDominated: return "dominated";
  }
  return "unknown";
}

SimResult simulate_distributed_cover(const ExtendedGraph& g, const std::vector<NodeId>& terminals) {
  ExtendedTransport transport;
  return run_protocol(g, terminals, transport);
}

SimResult simulate_on_base_graph(const Network& net, const std::vector<NodeId>& terminals, int delta) {
  require_valid(net);
  if (delta == 0) delta = net.period() + 1;
  if (delta <= net.period()) {
    throw InvalidInput("delta must exceed K (" + std::to_string(net.period()) + "), got " +
                       std::to_string(delta));
  }
  const ExtendedGraph g(net);
  NuclearTransport transport(g, delta);
  return run_protocol(g, terminals, transport);
}

DistributedOutcome distributed_pipeline(const Network& net, const MulticastInstance& inst,
                                        const SolverConfig& cfg) {
  require_valid(net);
  require_compatible(net, inst);
  DistributedOutcome out{MulticastPlan{MulticastTree(inst.source()), {}}, {}, {}};
  if (inst.terminals().size() == 1) return out;
  if (!terminals_connected(net, inst)) {
    throw Infeasible("terminals are not connected to the source");
  }
  const ExtendedGraph g(net);
  out.cover_stage = simulate_distributed_cover(g, inst.terminals());
  const auto bridge = connect_cover(g, out.cover_stage.cover, cfg);
  out.plan = plan_from_mapping(map_bridge_to_tree(bridge, g, inst), net);

  const auto m = static_cast<std::uint64_t>(inst.terminals().size());
  const auto v = static_cast<std::uint64_t>(net.node_count());
  out.budgets.diameter = component_diameter(net, inst.source());
  out.budgets.steiner_messages = m * v;
  out.budgets.steiner_time = m * static_cast<std::uint64_t>(out.budgets.diameter);
  out.budgets.dfs_messages = v;
  out.budgets.dfs_time = v;
  return out;
}

std::string format_message_log(const std::vector<MessageRecord>& log) {
  std::ostringstream out;
  out << "round,kind,from,to\n";
  for (const auto& r : log) {
    out << r.round << ',' << to_string(r.kind) << ',' << r.from << ',';
    if (r.to == kBroadcast) {
      out << '*';
    } else {
      out << r.to;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace dutycast
