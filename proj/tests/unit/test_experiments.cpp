#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>

#include "dutycast/errors.hpp"
#include "dutycast/experiments.hpp"
#include "dutycast/topology_io.hpp"

using namespace dutycast;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n_nodes = 30;
  cfg.range = 350.0;
  cfg.periods = {6};
  cfg.terminal_fractions = {0.3};
  cfg.trials = 3;
  return cfg;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, DefaultsAreValid) { EXPECT_NO_THROW(validate_config(ExperimentConfig{})); }

TEST(Config, RejectsBadFields) {
  auto bad = [](auto mutate) {
    ExperimentConfig cfg;
    mutate(cfg);
    EXPECT_THROW(validate_config(cfg), InvalidInput);
  };
  bad([](ExperimentConfig& c) { c.n_nodes = 0; });
  bad([](ExperimentConfig& c) { c.width = 0; });
  bad([](ExperimentConfig& c) { c.range = -1; });
  bad([](ExperimentConfig& c) { c.periods = {0}; });
  bad([](ExperimentConfig& c) { c.periods = {}; });
  bad([](ExperimentConfig& c) { c.duty_slots = 21; });
  bad([](ExperimentConfig& c) { c.duty_slots = 0; });
  bad([](ExperimentConfig& c) { c.duty_fraction = 0.0; });
  bad([](ExperimentConfig& c) { c.duty_fraction = 1.5; });
  bad([](ExperimentConfig& c) {
    c.duty_slots = 2;
    c.duty_fraction = 0.5;
  });
  bad([](ExperimentConfig& c) { c.terminal_fractions = {1.2}; });
  bad([](ExperimentConfig& c) { c.terminal_counts = {101}; });
  bad([](ExperimentConfig& c) { c.terminal_counts = {0}; });
  bad([](ExperimentConfig& c) { c.trials = 0; });
  bad([](ExperimentConfig& c) { c.algorithms = {}; });
  bad([](ExperimentConfig& c) { c.max_retries = -1; });
  bad([](ExperimentConfig& c) { c.energy = {0, 15}; });
}

TEST(Config, SweepPoints) {
  ExperimentConfig cfg;
  cfg.periods = {5, 10};
  cfg.terminal_fractions = {0.2, 0.25, 1.0};
  const auto pts = sweep_points(cfg);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0].period, 5);
  EXPECT_EQ(pts[0].n_terminals, 20u);
  EXPECT_EQ(pts[1].n_terminals, 25u);
  EXPECT_EQ(pts[2].n_terminals, 100u);
  EXPECT_EQ(pts[3].period, 10);
  cfg.terminal_counts = {7};
  const auto counts = sweep_points(cfg);
  ASSERT_EQ(counts.size(), 2u);
  EXPECT_EQ(counts[1].n_terminals, 7u);
}

TEST(Config, DutySlots) {
  ExperimentConfig cfg;
  EXPECT_EQ(duty_slots_for(cfg, 20), 5);
  EXPECT_EQ(duty_slots_for(cfg, 5), 2);
  EXPECT_EQ(duty_slots_for(cfg, 1), 1);
  cfg.duty_slots = 3;
  EXPECT_EQ(duty_slots_for(cfg, 10), 3);
  EXPECT_EQ(duty_slots_for(cfg, 2), 2);
}

TEST(Generator, TinyAreaIsComplete) {
  ExperimentConfig cfg;
  cfg.n_nodes = 2;
  cfg.width = cfg.height = 1.0;
  const auto topo = generate_topology(cfg, {20, 2}, 0);
  EXPECT_EQ(topo.network.node_count(), 2u);
  EXPECT_TRUE(topo.network.has_edge(0, 1));
  EXPECT_EQ(topo.instance.terminals().size(), 2u);
  EXPECT_EQ(topo.resamples, 0);
}

TEST(Generator, SparseDeploymentIsInfeasible) {
  ExperimentConfig cfg;
  cfg.range = 0.1;
  cfg.max_retries = 5;
  EXPECT_THROW(generate_topology(cfg, {20, 50}, 0), Infeasible);
}

TEST(Generator, DeterministicAndWellFormed) {
  auto cfg = small_config();
  for (int trial = 0; trial < 5; ++trial) {
    const SweepPoint pt{6, 9};
    const auto a = generate_topology(cfg, pt, trial);
    const auto b = generate_topology(cfg, pt, trial);
    EXPECT_EQ(write_topology(a.network, &a.instance), write_topology(b.network, &b.instance));
    const auto& net = a.network;
    ASSERT_TRUE(net.has_positions());
    for (std::size_t u = 0; u < net.node_count(); ++u) {
      const auto p = net.positions()[u];
      EXPECT_GE(p.x, 0.0);
      EXPECT_LE(p.x, cfg.width);
      EXPECT_EQ(net.active(static_cast<NodeId>(u)).size(), 2u);
      for (std::size_t v = u + 1; v < net.node_count(); ++v) {
        const auto q = net.positions()[v];
        const double d2 = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
        EXPECT_EQ(net.has_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)),
                  d2 <= cfg.range * cfg.range);
      }
    }
    EXPECT_EQ(a.instance.terminals().size(), 9u);
  }
  const auto other = generate_topology(cfg, {6, 9}, 7);
  EXPECT_NE(write_topology(other.network), write_topology(generate_topology(cfg, {6, 9}, 0).network));
}

TEST(Generator, BernoulliSchedulesNonEmpty) {
  auto cfg = small_config();
  cfg.duty_fraction = 0.05;
  const auto topo = generate_topology(cfg, {6, 9}, 0);
  for (std::size_t u = 0; u < topo.network.node_count(); ++u)
    EXPECT_FALSE(topo.network.active(static_cast<NodeId>(u)).empty());
}

TEST(Sweep, AlgorithmsShareEachTopology) {
  auto cfg = small_config();
  cfg.trials = 1;
  const auto res = run_sweep(cfg);
  ASSERT_TRUE(res.failures.empty());
  ASSERT_EQ(res.records.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(res.records[i].algorithm, all_algorithms()[i]);
    EXPECT_EQ(res.records[i].seed, cfg.seed);
    EXPECT_EQ(res.records[i].n_terminals, 9u);
    EXPECT_EQ(res.records[i].n_nodes, 30u);
    EXPECT_EQ(res.records[i].runtime_ms, 0.0);
  }
}

TEST(Sweep, EnergyMatchesCounts) {
  auto cfg = small_config();
  cfg.terminal_fractions = {0.2, 0.6, 1.0};
  const auto res = run_sweep(cfg);
  for (const auto& r : res.records) {
    EXPECT_EQ(r.energy, r.transmissions * cfg.energy.send +
                            static_cast<Energy>(r.tree_nodes - 1) * cfg.energy.receive);
    EXPECT_LE(r.forwarders, r.tree_nodes);
    EXPECT_GE(r.tree_nodes, r.n_terminals);
  }
}

TEST(Sweep, FailuresAreCollected) {
  auto cfg = small_config();
  cfg.range = 0.1;
  cfg.max_retries = 2;
  cfg.trials = 2;
  const auto res = run_sweep(cfg);
  EXPECT_TRUE(res.records.empty());
  EXPECT_EQ(res.failures.size(), 2u);
}

TEST(Sweep, CsvIsDeterministic) {
  const auto cfg = small_config();
  const auto a = to_csv(run_sweep(cfg).records);
  EXPECT_EQ(a, to_csv(run_sweep(cfg).records));
  EXPECT_EQ(a.substr(0, kCsvHeader.size()), kCsvHeader);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 13);
}

TEST(Sweep, TcsBeatsBaselinesOnTransmissionsAtHighDensity) {
  ExperimentConfig cfg;
  cfg.terminal_fractions = {0.9};
  cfg.duty_fraction = 0.5;
  cfg.trials = 20;
  const auto s = summarize(run_sweep(cfg).records);
  const auto* tcs = s.find(20, 90, Algorithm::kTcs);
  ASSERT_NE(tcs, nullptr);
  for (Algorithm b : {Algorithm::kSpt, Algorithm::kAmst, Algorithm::kMnt})
    EXPECT_LT(tcs->transmissions.mean, s.find(20, 90, b)->transmissions.mean) << to_string(b);
}

TEST(Summary, Statistics) {
  RunRecord r;
  r.period = 4;
  r.n_terminals = 3;
  r.transmissions = 10;
  r.energy = 100;
  r.tree_nodes = 5;
  EXPECT_THROW(summarize({}), InvalidInput);

  auto one = summarize({r});
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_DOUBLE_EQ(one.rows[0].transmissions.mean, 10.0);
  EXPECT_DOUBLE_EQ(one.rows[0].transmissions.stddev, 0.0);
  ASSERT_EQ(one.reductions.size(), 1u);
  EXPECT_FALSE(one.reductions[0].transmission_reduction_pct);

  auto r2 = r;
  r2.transmissions = 14;
  auto base = r;
  base.algorithm = Algorithm::kSpt;
  base.transmissions = 16;
  base.energy = 200;
  auto base2 = base;
  base2.algorithm = Algorithm::kMnt;
  base2.transmissions = 20;
  const auto s = summarize({r, r2, base, base2});
  const auto* tcs = s.find(4, 3, Algorithm::kTcs);
  ASSERT_NE(tcs, nullptr);
  EXPECT_EQ(tcs->runs, 2u);
  EXPECT_DOUBLE_EQ(tcs->transmissions.mean, 12.0);
  EXPECT_NEAR(tcs->transmissions.stddev, std::sqrt(8.0), 1e-12);
  EXPECT_DOUBLE_EQ(*s.reductions[0].transmission_reduction_pct, 25.0);
  EXPECT_DOUBLE_EQ(*s.reductions[0].energy_reduction_pct, 50.0);
  EXPECT_EQ(s.find(4, 3, Algorithm::kAmst), nullptr);
  const auto csv = summary_to_csv(s);
  EXPECT_NE(csv.find("25.00"), std::string::npos);
}

TEST(TopologyIo, RoundTrip) {
  const Network net(3, {DutySchedule({1, 3}), DutySchedule({2}), DutySchedule({1})}, {{0, 1}, {1, 2}},
                    std::vector<Position>{{0.5, 1.0}, {2.0, 3.25}, {4.0, 0.0}});
  const MulticastInstance inst(1, {0, 2});
  const auto text = write_topology(net, &inst);
  const auto doc = read_topology(text);
  EXPECT_EQ(write_topology(doc.network, doc.instance ? &*doc.instance : nullptr), text);
  ASSERT_TRUE(doc.instance);
  EXPECT_EQ(doc.instance->source(), 1);

  const Network bare(2, {DutySchedule({1}), DutySchedule({2})}, {{0, 1}});
  const auto bare_doc = read_topology(write_topology(bare));
  EXPECT_FALSE(bare_doc.instance);
  EXPECT_FALSE(bare_doc.network.has_positions());
}

TEST(TopologyIo, RejectsMalformedDocuments) {
  EXPECT_THROW(read_topology("{"), InvalidInput);
  EXPECT_THROW(read_topology("[]"), InvalidInput);
  EXPECT_THROW(read_topology(R"({"version":2,"K":1,"nodes":[],"edges":[]})"), InvalidInput);
  EXPECT_THROW(read_topology(R"({"version":1,"K":1,"nodes":[{"id":1,"active_slots":[1]}],"edges":[]})"),
               InvalidInput);
  EXPECT_THROW(
      read_topology(R"({"version":1,"K":1,"nodes":[{"id":0,"x":1,"active_slots":[1]}],"edges":[]})"),
      InvalidInput);
  EXPECT_THROW(
      read_topology(R"({"version":1,"K":1,"nodes":[{"id":0,"active_slots":[1]}],"edges":[[0]]})"),
      InvalidInput);
}

#ifdef DUTYCAST_CLI
namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DUTYCAST_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(Cli, ExitCodes) {
  const auto dir = std::filesystem::temp_directory_path() / "dutycast_cli_test";
  std::filesystem::create_directories(dir);
  const auto topo = (dir / "t.json").string();
  EXPECT_EQ(run_cli("gen --seed 3 --nodes 20 -K 4 --terminals 5 -o " + topo), 0);
  EXPECT_EQ(run_cli("solve " + topo), 0);
  EXPECT_EQ(run_cli("distsim " + topo), 0);
  EXPECT_EQ(run_cli("sweep --nodes 20 -K 4 --counts 4 --trials 1"), 0);
  EXPECT_EQ(run_cli("gen --nodes 50 --range 0.1 --max-retries 2"), 2);
  EXPECT_EQ(run_cli("oracle --max-nodes 5 " + topo), 3);
  EXPECT_EQ(run_cli("solve " + (dir / "missing.json").string()), 1);
  EXPECT_EQ(run_cli("sweep --trials 0"), 1);

  const auto bad = (dir / "bad.json").string();
  std::ofstream(bad) << "{\"version\": 1";
  EXPECT_EQ(run_cli("solve " + bad), 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, GenIsReproducible) {
  const auto dir = std::filesystem::temp_directory_path() / "dutycast_cli_gen";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  ASSERT_EQ(run_cli("gen --seed 9 --nodes 25 -o " + a.string()), 0);
  ASSERT_EQ(run_cli("gen --seed 9 --nodes 25 -o " + b.string()), 0);
  EXPECT_EQ(read_file(a), read_file(b));
  std::filesystem::remove_all(dir);
}
#endif
