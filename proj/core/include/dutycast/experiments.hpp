#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dutycast/steiner.hpp"
#include "dutycast/tree.hpp"

namespace dutycast {

enum class Algorithm { kTcs, kSpt, kAmst, kMnt };

std::string to_string(Algorithm alg);
Algorithm parse_algorithm(std::string_view name);
inline const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> kAll = {Algorithm::kTcs, Algorithm::kSpt, Algorithm::kAmst,
                                              Algorithm::kMnt};
  return kAll;
}

/// Random deployment and sweep parameters. Defaults follow the evaluation
/// setup: 100 nodes in 1000 m x 1000 m, 300 m range, K = 20, e_s = 100,
/// e_r = 15, terminal fraction 0.2..1.0 in steps of 0.1.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t n_nodes = 100;
  double width = 1000.0;
  double height = 1000.0;
  double range = 300.0;

  // Working-period sweep.
  std::vector<int> periods = {20};

  // Active slots per node. With duty_fraction set, each slot is active
  // independently with that probability (redrawn if empty). Otherwise each
  // node draws duty_slots distinct slots, defaulting to ceil(K / 4).
  std::optional<int> duty_slots;
  std::optional<double> duty_fraction;

  // Terminal sweep: explicit counts when non-empty, else fractions of n_nodes.
  std::vector<double> terminal_fractions = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<std::size_t> terminal_counts;

  int trials = 20;
  std::vector<Algorithm> algorithms = all_algorithms();
  EnergyModel energy{100, 15};
  SolverConfig solver;

  // Resamples allowed per trial when the terminals come out disconnected.
  int max_retries = 200;
  // Wall-clock timing makes output non-reproducible, so it is opt-in.
  bool record_runtime = false;
};

// Throws InvalidInput describing the first bad field.
void validate_config(const ExperimentConfig& cfg);

struct SweepPoint {
  int period = 0;
  std::size_t n_terminals = 0;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg);

// Active slot count for a given K under the fixed-count duty model.
int duty_slots_for(const ExperimentConfig& cfg, int period);

struct Topology {
  Network network;
  MulticastInstance instance;
  int resamples = 0;
};

/// Uniform deployment, unit-disk links, random schedules and terminals (the
/// first sampled terminal is the source). Redraws the whole deployment until
/// the terminals are connected. Deterministic in (seed, point, trial). Throws
/// Infeasible once max_retries redraws fail.
Topology generate_topology(const ExperimentConfig& cfg, const SweepPoint& point, int trial);

// The mt19937_64 stream used for one trial, seeded through std::seed_seq.
std::mt19937_64 trial_rng(std::uint64_t seed, const SweepPoint& point, int trial);

struct RunRecord {
  std::uint64_t seed = 0;
  std::size_t n_nodes = 0;
  std::size_t n_terminals = 0;
  int period = 0;
  Algorithm algorithm = Algorithm::kTcs;
  std::int64_t transmissions = 0;  // sum |B(u)|
  Energy energy = 0;
  std::size_t tree_nodes = 0;
  std::size_t forwarders = 0;      // |nl(T)|
  double runtime_ms = 0.0;
};

struct TrialFailure {
  SweepPoint point;
  int trial = 0;
  std::string message;
};

struct SweepResult {
  std::vector<RunRecord> records;  // (point, trial, algorithm) order
  std::vector<TrialFailure> failures;
};

// Plan for one algorithm on one instance.
MulticastPlan run_algorithm(Algorithm alg, const Network& net, const MulticastInstance& inst,
                            const SolverConfig& cfg);

RunRecord make_record(const ExperimentConfig& cfg, const SweepPoint& point, Algorithm alg,
                      const MulticastPlan& plan, double runtime_ms);

/// Every algorithm on the same topology per (point, trial). Failed trials are
/// collected, not thrown.
SweepResult run_sweep(const ExperimentConfig& cfg);

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
};

struct SummaryRow {
  int period = 0;
  std::size_t n_terminals = 0;
  Algorithm algorithm = Algorithm::kTcs;
  std::size_t runs = 0;
  Stats transmissions;
  Stats energy;
  Stats tree_nodes;
  Stats forwarders;
};

struct PointReduction {
  int period = 0;
  std::size_t n_terminals = 0;
  // 100 * (best baseline mean - TCS mean) / best baseline mean, on
  // transmissions and on energy. Empty when TCS or every baseline is absent.
  std::optional<double> transmission_reduction_pct;
  std::optional<double> energy_reduction_pct;
};

struct Summary {
  std::vector<SummaryRow> rows;  // sorted by (period, n_terminals, algorithm)
  std::vector<PointReduction> reductions;

  const SummaryRow* find(int period, std::size_t n_terminals, Algorithm alg) const;
};

// Throws InvalidInput on empty input.
Summary summarize(const std::vector<RunRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "seed,n_nodes,n_terminals,K,algorithm,transmissions,energy,tree_nodes,forwarders,runtime_ms";

std::string to_csv(const std::vector<RunRecord>& records);
std::string summary_to_csv(const Summary& summary);

}  // namespace dutycast
