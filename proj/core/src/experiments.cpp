#include "dutycast/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dutycast/baselines.hpp"
#include "dutycast/errors.hpp"
#include "dutycast/solver.hpp"

namespace dutycast {

namespace {

// std distributions are implementation-defined, so sampling is done by hand
// on top of the raw mt19937_64 output to keep streams portable.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

// First k entries of a Fisher-Yates shuffle of `pool`.
template <typename T>
std::vector<T> sample_without_replacement(std::mt19937_64& rng, std::vector<T> pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double acc = 0.0;
    for (double x : xs) acc += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(acc / static_cast<double>(xs.size() - 1));
  }
  return s;
}

std::optional<double> reduction(double best, double tcs) {
  if (best <= 0.0) return std::nullopt;
  return 100.0 * (best - tcs) / best;
}

}  // namespace

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kTcs: return "tcs";
    case Algorithm::kSpt: return "spt";
    case Algorithm::kAmst: return "amst";
    case Algorithm::kMnt: return "mnt";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  throw InvalidInput("unknown algorithm '" + std::string(name) + "' (expected tcs, spt, amst or mnt)");
}

void validate_config(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& what) { throw InvalidInput("invalid experiment config: " + what); };
  if (cfg.n_nodes == 0) fail("n_nodes must be positive");
  if (!(cfg.width > 0.0) || !(cfg.height > 0.0)) fail("area must be positive");
  if (!(cfg.range > 0.0)) fail("range must be positive");
  if (cfg.periods.empty()) fail("no working periods");
  for (int k : cfg.periods) {
    if (k < 1) fail("working period K must be >= 1, got " + std::to_string(k));
    if (cfg.duty_slots && (*cfg.duty_slots < 1 || *cfg.duty_slots > k)) {
      fail("duty_slots must lie in [1, K] for K = " + std::to_string(k));
    }
  }
  if (cfg.duty_slots && cfg.duty_fraction) fail("set duty_slots or duty_fraction, not both");
  if (cfg.duty_fraction && !(*cfg.duty_fraction > 0.0 && *cfg.duty_fraction <= 1.0)) {
    fail("duty_fraction must lie in (0, 1]");
  }
  if (cfg.terminal_counts.empty()) {
    if (cfg.terminal_fractions.empty()) fail("no terminal fractions or counts");
    for (double f : cfg.terminal_fractions) {
      if (!(f > 0.0 && f <= 1.0)) fail("terminal fractions must lie in (0, 1]");
    }
  }
  for (std::size_t c : cfg.terminal_counts) {
    if (c == 0 || c > cfg.n_nodes) fail("terminal counts must lie in [1, n_nodes]");
  }
  if (cfg.trials < 1) fail("trials must be >= 1");
  if (cfg.algorithms.empty()) fail("no algorithms selected");
  if (cfg.max_retries < 0) fail("max_retries must be >= 0");
  EnergyModel::make(cfg.energy.send, cfg.energy.receive);
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg) {
  std::vector<std::size_t> counts = cfg.terminal_counts;
  if (counts.empty()) {
    for (double f : cfg.terminal_fractions) {
      const auto c = static_cast<std::size_t>(std::llround(f * static_cast<double>(cfg.n_nodes)));
      counts.push_back(std::clamp<std::size_t>(c, 1, cfg.n_nodes));
    }
  }
  std::vector<SweepPoint> points;
  for (int k : cfg.periods) {
    for (std::size_t c : counts) points.push_back({k, c});
  }
  return points;
}

int duty_slots_for(const ExperimentConfig& cfg, int period) {
  if (cfg.duty_slots) return std::min(*cfg.duty_slots, period);
  return std::max(1, (period + 3) / 4);
}

std::mt19937_64 trial_rng(std::uint64_t seed, const SweepPoint& point, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(point.period),
                    static_cast<std::uint32_t>(point.n_terminals), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

Topology generate_topology(const ExperimentConfig& cfg, const SweepPoint& point, int trial) {
  validate_config(cfg);
  const std::size_t n = cfg.n_nodes;
  const int k = point.period;
  if (k < 1) throw InvalidInput("working period K must be >= 1");
  if (point.n_terminals == 0 || point.n_terminals > n) {
    throw InvalidInput("terminal count must lie in [1, n_nodes]");
  }
  auto rng = trial_rng(cfg.seed, point, trial);
  std::vector<Slot> all_slots(static_cast<std::size_t>(k));
  std::iota(all_slots.begin(), all_slots.end(), 1);
  std::vector<NodeId> all_nodes(n);
  std::iota(all_nodes.begin(), all_nodes.end(), 0);
  const double r2 = cfg.range * cfg.range;

  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    std::vector<Position> pos(n);
    for (auto& p : pos) {
      p.x = uniform_unit(rng) * cfg.width;
      p.y = uniform_unit(rng) * cfg.height;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pos[i].x - pos[j].x;
        const double dy = pos[i].y - pos[j].y;
        if (dx * dx + dy * dy <= r2) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
    std::vector<DutySchedule> schedules;
    schedules.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Slot> active;
      if (cfg.duty_fraction) {
        while (active.empty()) {
          for (Slot s = 1; s <= k; ++s) {
            if (uniform_unit(rng) < *cfg.duty_fraction) active.push_back(s);
          }
        }
      } else {
        active = sample_without_replacement(rng, all_slots,
                                            static_cast<std::size_t>(duty_slots_for(cfg, k)));
      }
      schedules.emplace_back(std::move(active));
    }
    const auto terminals = sample_without_replacement(rng, all_nodes, point.n_terminals);
    Network net(k, std::move(schedules), std::move(edges), std::move(pos));
    MulticastInstance inst(terminals.front(), terminals);
    if (terminals_connected(net, inst)) return Topology{std::move(net), std::move(inst), attempt};
  }
  throw Infeasible("no connected deployment after " + std::to_string(cfg.max_retries) +
                   " resamples; the area is too sparse for the transmission range");
}

MulticastPlan run_algorithm(Algorithm alg, const Network& net, const MulticastInstance& inst,
                            const SolverConfig& cfg) {
  switch (alg) {
    case Algorithm::kTcs: return solve_memtcs(net, inst, cfg);
    case Algorithm::kSpt: return run_baseline(BaselineKind::kSpt, net, inst, cfg);
    case Algorithm::kAmst: return run_baseline(BaselineKind::kAmst, net, inst, cfg);
    case Algorithm::kMnt: return run_baseline(BaselineKind::kMnt, net, inst, cfg);
  }
  throw InvalidInput("unknown algorithm");
}

RunRecord make_record(const ExperimentConfig& cfg, const SweepPoint& point, Algorithm alg,
                      const MulticastPlan& plan, double runtime_ms) {
  RunRecord r;
  r.seed = cfg.seed;
  r.n_nodes = cfg.n_nodes;
  r.n_terminals = point.n_terminals;
  r.period = point.period;
  r.algorithm = alg;
  r.transmissions = transmission_count(plan.schedule);
  r.energy = energy_cost(plan, cfg.energy);
  r.tree_nodes = plan.tree.size();
  r.forwarders = tree_views(plan.tree).non_leaf.size();
  r.runtime_ms = runtime_ms;
  return r;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
  validate_config(cfg);
  SweepResult out;
  for (const auto& point : sweep_points(cfg)) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      std::optional<Topology> topo;
      try {
        topo = generate_topology(cfg, point, trial);
      } catch (const std::exception& e) {
        out.failures.push_back({point, trial, e.what()});
        continue;
      }
      for (Algorithm alg : cfg.algorithms) {
        try {
          const auto start = std::chrono::steady_clock::now();
          const auto plan = run_algorithm(alg, topo->network, topo->instance, cfg.solver);
          double ms = 0.0;
          if (cfg.record_runtime) {
            ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
          }
          out.records.push_back(make_record(cfg, point, alg, plan, ms));
        } catch (const std::exception& e) {
          out.failures.push_back({point, trial, to_string(alg) + ": " + e.what()});
        }
      }
    }
  }
  return out;
}

const SummaryRow* Summary::find(int period, std::size_t n_terminals, Algorithm alg) const {
  for (const auto& row : rows) {
    if (row.period == period && row.n_terminals == n_terminals && row.algorithm == alg) return &row;
  }
  return nullptr;
}

Summary summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw InvalidInput("cannot summarize an empty record set");
  struct Acc {
    std::vector<double> tx, energy, nodes, forwarders;
  };
  std::map<std::tuple<int, std::size_t, Algorithm>, Acc> groups;
  for (const auto& r : records) {
    auto& a = groups[{r.period, r.n_terminals, r.algorithm}];
    a.tx.push_back(static_cast<double>(r.transmissions));
    a.energy.push_back(static_cast<double>(r.energy));
    a.nodes.push_back(static_cast<double>(r.tree_nodes));
    a.forwarders.push_back(static_cast<double>(r.forwarders));
  }
  Summary s;
  for (const auto& [key, a] : groups) {
    s.rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), a.tx.size(),
                      stats_of(a.tx), stats_of(a.energy), stats_of(a.nodes), stats_of(a.forwarders)});
  }
  std::map<std::pair<int, std::size_t>, std::vector<const SummaryRow*>> points;
  for (const auto& row : s.rows) points[{row.period, row.n_terminals}].push_back(&row);
  for (const auto& [key, rows] : points) {
    PointReduction pr{key.first, key.second, std::nullopt, std::nullopt};
    const SummaryRow* tcs = nullptr;
    std::optional<double> best_tx;
    std::optional<double> best_energy;
    for (const SummaryRow* row : rows) {
      if (row->algorithm == Algorithm::kTcs) {
        tcs = row;
        continue;
      }
      best_tx = std::min(best_tx.value_or(row->transmissions.mean), row->transmissions.mean);
      best_energy = std::min(best_energy.value_or(row->energy.mean), row->energy.mean);
    }
    if (tcs != nullptr && best_tx) {
      pr.transmission_reduction_pct = reduction(*best_tx, tcs->transmissions.mean);
      pr.energy_reduction_pct = reduction(*best_energy, tcs->energy.mean);
    }
    s.reductions.push_back(pr);
  }
  return s;
}

std::string to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << r.n_nodes << ',' << r.n_terminals << ',' << r.period << ','
        << to_string(r.algorithm) << ',' << r.transmissions << ',' << r.energy << ','
        << r.tree_nodes << ',' << r.forwarders << ',' << format_double(r.runtime_ms, 3) << '\n';
  }
  return out.str();
}

std::string summary_to_csv(const Summary& summary) {
  std::ostringstream out;
  out << "K,n_terminals,algorithm,runs,transmissions_mean,transmissions_sd,energy_mean,energy_sd,"
         "tree_nodes_mean,tree_nodes_sd,forwarders_mean,forwarders_sd,"
         "transmission_reduction_pct,energy_reduction_pct\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v, 2) : std::string(); };
  for (const auto& row : summary.rows) {
    out << row.period << ',' << row.n_terminals << ',' << to_string(row.algorithm) << ','
        << row.runs;
    for (const Stats* st : {&row.transmissions, &row.energy, &row.tree_nodes, &row.forwarders}) {
      out << ',' << format_double(st->mean, 3) << ',' << format_double(st->stddev, 3);
    }
    std::string tx_pct;
    std::string energy_pct;
    if (row.algorithm == Algorithm::kTcs) {
      for (const auto& pr : summary.reductions) {
        if (pr.period == row.period && pr.n_terminals == row.n_terminals) {
          tx_pct = opt(pr.transmission_reduction_pct);
          energy_pct = opt(pr.energy_reduction_pct);
        }
      }
    }
    out << ',' << tx_pct << ',' << energy_pct << '\n';
  }
  return out.str();
}

}  // namespace dutycast
