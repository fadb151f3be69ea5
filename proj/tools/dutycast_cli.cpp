// Command-line front end: gen, solve, oracle, sweep, distsim.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dutycast/baselines.hpp"
#include "dutycast/distributed.hpp"
#include "dutycast/errors.hpp"
#include "dutycast/experiments.hpp"
#include "dutycast/oracle.hpp"
#include "dutycast/solver.hpp"
#include "dutycast/topology_io.hpp"

namespace {

using namespace dutycast;

enum ExitCode { kOk = 0, kInvalid = 1, kInfeasible = 2, kBudget = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string join(const std::vector<Slot>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

std::string ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return num == 0 ? "1" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

struct LoadedInstance {
  Network network;
  MulticastInstance instance;
};

LoadedInstance load(const std::string& path) {
  auto doc = read_topology(read_file(path));
  require_valid(doc.network);
  if (!doc.instance) throw InvalidInput(path + " has no \"multicast\" section");
  require_compatible(doc.network, *doc.instance);
  return {std::move(doc.network), std::move(*doc.instance)};
}

SteinerAlgorithm parse_steiner(const std::string& name) {
  if (name == "kmb") return SteinerAlgorithm::kKmb;
  if (name == "mehlhorn") return SteinerAlgorithm::kMehlhorn;
  throw InvalidInput("unknown Steiner algorithm '" + name + "' (expected kmb or mehlhorn)");
}

std::string describe_plan(const MulticastPlan& plan, const EnergyModel& model) {
  std::ostringstream out;
  out << "root " << plan.tree.root() << '\n';
  for (const auto& [parent, child] : plan.tree.edges()) out << "edge " << parent << ' ' << child << '\n';
  for (const auto& [node, slots] : plan.schedule) out << "send " << node << " slots " << join(slots) << '\n';
  out << "tree_nodes " << plan.tree.size() << '\n';
  out << "transmissions " << transmission_count(plan.schedule) << '\n';
  out << "energy " << energy_cost(plan, model) << '\n';
  return out.str();
}

std::string describe_counters(const std::string& prefix, const SimResult& r) {
  std::ostringstream out;
  out << prefix << "rounds " << r.rounds << '\n';
  out << prefix << "messages " << r.messages << '\n';
  for (const auto& [kind, count] : r.messages_by_kind) {
    out << prefix << "messages." << to_string(kind) << ' ' << count << '\n';
  }
  out << prefix << "time_slots " << r.time_slots << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multicast planner for duty-cycled wireless networks"};
  app.require_subcommand(1);

  // gen
  ExperimentConfig gen_cfg;
  std::size_t gen_terminals = 0;
  int gen_period = 20;
  int gen_trial = 0;
  std::optional<int> gen_duty_slots;
  std::optional<double> gen_duty_fraction;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random topology with a multicast instance");
  gen->add_option("--seed", gen_cfg.seed, "RNG seed");
  gen->add_option("--nodes", gen_cfg.n_nodes, "Node count")->check(CLI::PositiveNumber);
  gen->add_option("--width", gen_cfg.width, "Area width (m)");
  gen->add_option("--height", gen_cfg.height, "Area height (m)");
  gen->add_option("--range", gen_cfg.range, "Transmission range (m)");
  gen->add_option("-K,--period", gen_period, "Working period length");
  gen->add_option("--duty-slots", gen_duty_slots, "Active slots per node (default ceil(K/4))");
  gen->add_option("--duty-fraction", gen_duty_fraction, "Per-slot activity probability");
  gen->add_option("--terminals", gen_terminals, "Terminal count including the source (default n/2)");
  gen->add_option("--trial", gen_trial, "Trial index mixed into the seed");
  gen->add_option("--max-retries", gen_cfg.max_retries, "Resamples allowed for connectivity");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // solve
  std::string solve_topology;
  std::string solve_alg = "tcs";
  std::string solve_steiner = "kmb";
  Energy solve_es = 100;
  Energy solve_er = 15;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Plan one multicast session");
  solve->add_option("topology", solve_topology, "Topology JSON file")->required();
  solve->add_option("-a,--algorithm", solve_alg, "tcs, spt, amst or mnt");
  solve->add_option("--steiner", solve_steiner, "kmb or mehlhorn");
  solve->add_option("--es", solve_es, "Send cost");
  solve->add_option("--er", solve_er, "Receive cost");
  solve->add_option("-o,--out", solve_out, "Output file (default stdout)");

  // oracle
  std::string oracle_topology;
  Energy oracle_es = 10;
  Energy oracle_er = 2;
  OracleBudget budget;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Compare the approximation against exhaustive search");
  oracle->add_option("topology", oracle_topology, "Topology JSON file")->required();
  oracle->add_option("--es", oracle_es, "Send cost");
  oracle->add_option("--er", oracle_er, "Receive cost");
  oracle->add_option("--max-nodes", budget.max_nodes, "Node budget");
  oracle->add_option("--max-period", budget.max_period, "Working period budget");
  oracle->add_option("--max-subsets", budget.max_subsets, "Enumeration budget");
  oracle->add_option("-o,--out", oracle_out, "Output file (default stdout)");

  // sweep
  ExperimentConfig sweep_cfg;
  std::vector<std::string> sweep_algs;
  std::string sweep_steiner = "kmb";
  std::string sweep_out;
  std::string sweep_summary;
  auto* sweep = app.add_subcommand("sweep", "Run the experiment sweep and write CSV");
  sweep->add_option("--seed", sweep_cfg.seed, "RNG seed");
  sweep->add_option("--nodes", sweep_cfg.n_nodes, "Node count");
  sweep->add_option("--width", sweep_cfg.width, "Area width (m)");
  sweep->add_option("--height", sweep_cfg.height, "Area height (m)");
  sweep->add_option("--range", sweep_cfg.range, "Transmission range (m)");
  sweep->add_option("-K,--periods", sweep_cfg.periods, "Working period lengths")->delimiter(',');
  sweep->add_option("--duty-slots", sweep_cfg.duty_slots, "Active slots per node");
  sweep->add_option("--duty-fraction", sweep_cfg.duty_fraction, "Per-slot activity probability");
  auto* fractions = sweep->add_option("--fractions", sweep_cfg.terminal_fractions, "Terminal fractions")
                        ->delimiter(',');
  sweep->add_option("--counts", sweep_cfg.terminal_counts, "Terminal counts")
      ->delimiter(',')
      ->excludes(fractions);
  sweep->add_option("--trials", sweep_cfg.trials, "Trials per sweep point");
  sweep->add_option("-a,--algorithms", sweep_algs, "Subset of tcs,spt,amst,mnt")->delimiter(',');
  sweep->add_option("--steiner", sweep_steiner, "kmb or mehlhorn");
  sweep->add_option("--es", sweep_cfg.energy.send, "Send cost");
  sweep->add_option("--er", sweep_cfg.energy.receive, "Receive cost");
  sweep->add_option("--max-retries", sweep_cfg.max_retries, "Resamples allowed for connectivity");
  sweep->add_flag("--record-runtime", sweep_cfg.record_runtime, "Fill runtime_ms with wall-clock time");
  sweep->add_option("-o,--out", sweep_out, "Record CSV (default stdout)");
  sweep->add_option("--summary", sweep_summary, "Also write the per-point summary CSV here");

  // distsim
  std::string dist_topology;
  int dist_delta = 0;
  std::string dist_log;
  std::string dist_out;
  Energy dist_es = 100;
  Energy dist_er = 15;
  auto* distsim = app.add_subcommand("distsim", "Simulate the distributed cover protocol");
  distsim->add_option("topology", dist_topology, "Topology JSON file")->required();
  distsim->add_option("--delta", dist_delta, "Slots per step on the base graph (> K; default K+1)");
  distsim->add_option("--log", dist_log, "Write the extended-graph message trace CSV here");
  distsim->add_option("--es", dist_es, "Send cost");
  distsim->add_option("--er", dist_er, "Receive cost");
  distsim->add_option("-o,--out", dist_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen) {
      gen_cfg.periods = {gen_period};
      gen_cfg.duty_slots = gen_duty_slots;
      gen_cfg.duty_fraction = gen_duty_fraction;
      if (gen_terminals == 0) gen_terminals = std::max<std::size_t>(1, gen_cfg.n_nodes / 2);
      gen_cfg.terminal_counts = {gen_terminals};
      const auto topo = generate_topology(gen_cfg, {gen_period, gen_terminals}, gen_trial);
      emit(gen_out, write_topology(topo.network, &topo.instance));
    } else if (*solve) {
      const auto in = load(solve_topology);
      const auto model = EnergyModel::make(solve_es, solve_er);
      SolverConfig cfg;
      cfg.steiner = parse_steiner(solve_steiner);
      const auto plan = run_algorithm(parse_algorithm(solve_alg), in.network, in.instance, cfg);
      emit(solve_out, "algorithm " + solve_alg + "\n" + describe_plan(plan, model));
    } else if (*oracle) {
      const auto in = load(oracle_topology);
      const auto model = EnergyModel::make(oracle_es, oracle_er);
      const ExtendedGraph g(in.network);
      const auto& m = in.instance.terminals();
      const auto exact = exact_memtcs(in.network, in.instance, model, budget);
      const auto approx = solve_memtcs(in.network, in.instance);
      std::ostringstream out;
      out << "nodes " << in.network.node_count() << '\n';
      out << "K " << in.network.period() << '\n';
      out << "terminals " << m.size() << '\n';
      out << "max_degree " << in.network.max_degree() << '\n';
      if (m.size() >= 2) {
        const auto best = exact_msb(g, m, budget);
        const auto found = find_msb(g, m);
        const auto mist = exact_mist_xi(in.network, m, budget);
        out << "exact_bridge_size " << best.size() << '\n';
        out << "approx_bridge_size " << found.size() << '\n';
        out << "bridge_ratio "
            << ratio(static_cast<std::int64_t>(found.size()), static_cast<std::int64_t>(best.size()))
            << '\n';
        out << "min_tree_xi " << mist.xi << '\n';
      }
      const auto exact_energy = energy_cost(exact, model);
      const auto approx_energy = energy_cost(approx, model);
      out << "exact_energy " << exact_energy << '\n';
      out << "approx_energy " << approx_energy << '\n';
      out << "energy_ratio " << ratio(approx_energy, exact_energy) << '\n';
      emit(oracle_out, out.str());
    } else if (*sweep) {
      if (!sweep_algs.empty()) {
        sweep_cfg.algorithms.clear();
        for (const auto& a : sweep_algs) sweep_cfg.algorithms.push_back(parse_algorithm(a));
      }
      sweep_cfg.solver.steiner = parse_steiner(sweep_steiner);
      const auto result = run_sweep(sweep_cfg);
      for (const auto& f : result.failures) {
        std::cerr << "warning: K=" << f.point.period << " terminals=" << f.point.n_terminals
                  << " trial=" << f.trial << ": " << f.message << '\n';
      }
      if (result.records.empty()) throw Infeasible("every trial failed");
      emit(sweep_out, to_csv(result.records));
      if (!sweep_summary.empty()) emit(sweep_summary, summary_to_csv(summarize(result.records)));
    } else if (*distsim) {
      const auto in = load(dist_topology);
      const auto model = EnergyModel::make(dist_es, dist_er);
      const auto outcome = distributed_pipeline(in.network, in.instance);
      std::ostringstream out;
      out << "cover";
      for (const auto& id : outcome.cover_stage.cover) out << ' ' << to_string(id);
      out << '\n' << describe_counters("extended.", outcome.cover_stage);
      if (in.instance.terminals().size() > 1) {
        const auto base = simulate_on_base_graph(in.network, in.instance.terminals(), dist_delta);
        out << describe_counters("base.", base);
      }
      const auto& b = outcome.budgets;
      out << "diameter " << b.diameter << '\n';
      out << "steiner_budget.messages " << b.steiner_messages << '\n';
      out << "steiner_budget.time " << b.steiner_time << '\n';
      out << "dfs_budget.messages " << b.dfs_messages << '\n';
      out << "dfs_budget.time " << b.dfs_time << '\n';
      out << describe_plan(outcome.plan, model);
      emit(dist_out, out.str());
      if (!dist_log.empty()) emit(dist_log, format_message_log(outcome.cover_stage.log));
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
