#include "scensched/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "scensched/approx.hpp"
#include "scensched/balance.hpp"
#include "scensched/dp_minavg.hpp"
#include "scensched/error.hpp"
#include "scensched/generators.hpp"
#include "scensched/io.hpp"
#include "scensched/two_scenario.hpp"

namespace scensched {

namespace {

bool is_minmax_like(ObjectiveKind kind) {
  return kind == ObjectiveKind::MinMax || kind == ObjectiveKind::RegretMax;
}

}  // namespace

AlgoRun run_algorithm(const Instance& inst, std::string_view algo, ObjectiveKind kind,
                      const AlgoParams& params) {
  AlgoRun run;
  if (algo == "oracle") {
    run.schedule = brute_force(inst, kind, params.oracle).best_schedule;
  } else if (algo == "two-scenario") {
    run.schedule = solve_two_scenarios(inst);
  } else if (algo == "dp") {
    if (is_minmax_like(kind)) {
      run.schedule = solve_pseudo(inst, kind, params.dp).schedule;
    } else {
      run.schedule = solve_minavg(inst, params.dp).schedule;
    }
  } else if (algo == "config") {
    if (kind != ObjectiveKind::MinMax && kind != ObjectiveKind::MinAvgSum) {
      throw ContractError("config requires objective minmax or minavg");
    }
    run.schedule = solve_config(inst, kind, params.config).schedule;
  } else if (algo == "fptas") {
    if (kind != ObjectiveKind::MinMax) throw ContractError("fptas requires objective minmax");
    run.schedule = fptas(inst, params.epsilon, params.dp).schedule;
  } else if (algo == "approx-minmax2") {
    if (kind != ObjectiveKind::MinMax) throw ContractError("approx-minmax2 requires objective minmax");
    run.schedule = minmax_all_on_one(inst);
  } else if (algo == "approx-minavg") {
    if (kind != ObjectiveKind::MinAvgSum && kind != ObjectiveKind::RegretSum) {
      throw ContractError("approx-minavg requires objective minavg or regret-sum");
    }
    run.schedule = minavg_derandomized(inst);
  } else {
    throw ContractError("unknown algorithm '" + std::string(algo) + "'");
  }
  run.cost = evaluate(inst, run.schedule, kind);
  return run;
}

std::optional<Rational> certified_ratio(const Instance& inst, std::string_view algo,
                                        ObjectiveKind kind, const AlgoParams& params) {
  if (algo == "oracle" || algo == "two-scenario" || algo == "dp" || algo == "config") return Rational(1);
  if (algo == "fptas") return Rational(1) + params.epsilon;
  if (algo == "approx-minmax2") return Rational(2);
  if (algo == "approx-minavg" && kind == ObjectiveKind::MinAvgSum) {
    return Rational(3, 2) - Rational(1, 2 * static_cast<Cost>(inst.machines()));
  }
  return std::nullopt;
}

namespace {

bool guard_override() {
  const char* value = std::getenv("SCHED_GUARD_OVERRIDE");
  return value != nullptr && *value != '\0' && std::string_view(value) != "0";
}

AlgoParams make_params(const std::string& epsilon) {
  AlgoParams params;
  auto eps = Rational::parse(epsilon);
  if (!eps || *eps <= Rational(0)) throw ContractError("epsilon must be a positive rational, got '" + epsilon + "'");
  params.epsilon = *eps;
  if (guard_override()) {
    params.oracle.unlimited = true;
    params.dp.max_states = std::numeric_limits<std::size_t>::max();
    params.config.max_states = std::numeric_limits<std::size_t>::max();
    params.config.max_types = std::numeric_limits<int>::max();
  }
  return params;
}

ObjectiveKind objective_or_throw(const std::string& text) {
  auto kind = parse_objective(text);
  if (!kind) throw ContractError("unknown objective '" + text + "'");
  return *kind;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << r.to_double();
  return s.str();
}

Rational ratio_of(Cost value, Cost reference) {
  if (reference == 0) return Rational(value == 0 ? 1 : 0);
  return Rational(value, reference);
}

Json run_record(const Instance& inst, const std::string& algo, ObjectiveKind kind, const AlgoRun& run,
                double time_ms, const Json& params) {
  Json record;
  record["instance_hash"] = hex64(instance_hash(inst));
  record["algo"] = algo;
  record["objective"] = std::string(to_string(kind));
  record["value"] = cost_to_json(run.cost.aggregate);
  Json per = Json::array();
  for (Cost c : run.cost.per_scenario) per.push_back(cost_to_json(c));
  record["per_scenario"] = std::move(per);
  Json optima = Json::array();
  for (Cost c : scenario_optima(inst)) optima.push_back(cost_to_json(c));
  record["scenario_optima"] = std::move(optima);
  record["disbalance"] = disbalance_to_json(disbalance(inst, run.schedule));
  record["schedule"] = to_input_order(inst, run.schedule);
  record["params"] = params;
  record["time_ms"] = time_ms;
  return record;
}

std::vector<Weight> parse_list(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ContractError("cannot parse list entry '" + item + "'");
    }
  }
  return out;
}

Graph graph_from_flags(const std::string& file, int vertices, const std::string& edges) {
  if (!file.empty()) return graph_from_json(read_json_file(file));
  Graph g;
  g.vertices = vertices;
  std::stringstream in(edges);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ContractError("edges are written u-v, got '" + item + "'");
    try {
      g.edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw ContractError("cannot parse edge '" + item + "'");
    }
  }
  validate(g);
  return g;
}

void emit(const std::string& path, const Json& doc, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << doc.dump(2) << "\n";
  } else {
    write_text_file(path, doc.dump(2) + "\n");
  }
}

struct BenchRow {
  std::string instance;
  Instance inst;
};

std::vector<BenchRow> bench_suite(const std::string& suite, std::uint64_t seed, int count) {
  if (suite != "default") throw ContractError("unknown bench suite '" + suite + "'");
  std::vector<BenchRow> rows;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const int n = 5 + static_cast<int>(s % 3);
    const int m = 2 + static_cast<int>(s % 2);
    const int k = 2 + static_cast<int>((s / 2) % 2);
    rows.push_back({"random-" + std::to_string(s), gen_random(n, m, k, 9, Rational(1, 2), s)});
    rows.push_back({"unit-" + std::to_string(s), gen_random(n + 1, m, k, 1, Rational(1, 2), s)});
  }
  return rows;
}

int cmd_bench(const std::string& suite, std::uint64_t seed, int count, std::ostream& out) {
  const AlgoParams params = make_params("1/2");
  out << "instance,n,m,K,algo,objective,value,oracle_value,ratio,time_ms,full_disbalance\n";
  bool all_ok = true;
  for (const auto& row : bench_suite(suite, seed, count)) {
    const Instance& inst = row.inst;
    std::vector<std::pair<std::string, ObjectiveKind>> runs = {
        {"dp", ObjectiveKind::MinMax},
        {"dp", ObjectiveKind::MinAvgSum},
        {"fptas", ObjectiveKind::MinMax},
        {"approx-minavg", ObjectiveKind::MinAvgSum},
    };
    if (inst.machines() == 2) runs.emplace_back("approx-minmax2", ObjectiveKind::MinMax);
    if (inst.scenario_count() == 2) runs.emplace_back("two-scenario", ObjectiveKind::MinAvgSum);
    if (inst.unit_weights()) {
      runs.emplace_back("config", ObjectiveKind::MinMax);
      runs.emplace_back("config", ObjectiveKind::MinAvgSum);
    }
    for (const auto& [algo, kind] : runs) {
      const auto start = std::chrono::steady_clock::now();
      const AlgoRun run = run_algorithm(inst, algo, kind, params);
      const double ms = elapsed_ms(start);
      const Cost oracle = brute_force(inst, kind, params.oracle).best_value;
      const Rational ratio = ratio_of(run.cost.aggregate, oracle);
      if (auto bound = certified_ratio(inst, algo, kind, params); bound && ratio > *bound) all_ok = false;
      out << row.instance << ',' << inst.job_count() << ',' << inst.machines() << ','
          << inst.scenario_count() << ',' << algo << ',' << to_string(kind) << ','
          << to_string(run.cost.aggregate) << ',' << to_string(oracle) << ',' << decimal(ratio) << ','
          << std::fixed << std::setprecision(3) << ms << ',' << disbalance(inst, run.schedule).full_f << '\n';
    }
  }
  return all_ok ? 0 : 1;
}

Json probe_to_json(const ProbeReport& report, const ProbeOptions& options) {
  Json doc;
  doc["n"] = options.n;
  doc["m"] = options.machines;
  doc["K"] = options.scenarios;
  doc["trials"] = options.trials;
  doc["seed"] = options.seed;
  doc["w_max"] = options.w_max;
  doc["density"] = options.density.to_string();
  doc["max_observed"] = report.max_observed;
  doc["lemma_final_bound"] = report.lemma_bound;
  int worst_final = 0;
  for (const auto& t : report.trials) worst_final = std::max(worst_final, t.max_final_disbalance);
  doc["max_final_disbalance"] = worst_final;
  Json maximizers = Json::array();
  for (int idx : report.maximizers) {
    const auto& t = report.trials[idx];
    Json item;
    item["trial"] = idx;
    item["seed"] = t.seed;
    item["min_full_disbalance"] = t.min_full_disbalance;
    item["optimal_count"] = t.optimal_count;
    item["weights"] = t.weights;
    item["scenarios"] = t.scenarios;
    maximizers.push_back(std::move(item));
  }
  doc["maximizers"] = std::move(maximizers);
  Json values = Json::array();
  for (const auto& t : report.trials) values.push_back(t.min_full_disbalance);
  doc["per_trial"] = std::move(values);
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total completion time scheduling under job-subset scenarios"};
  app.require_subcommand(1);

  std::string instance_path, schedule_path, output_path, algo = "dp", objective = "minmax", epsilon = "1/2";

  auto* solve = app.add_subcommand("solve", "Run one algorithm and print a run record");
  solve->add_option("-i,--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--algo", algo, "oracle|two-scenario|dp|config|fptas|approx-minmax2|approx-minavg");
  solve->add_option("--objective", objective, "minmax|minavg|regret-max|regret-sum");
  solve->add_option("--epsilon", epsilon, "FPTAS accuracy, e.g. 1/10");
  solve->add_option("-o,--output", output_path, "Write the schedule JSON here");

  auto* verify = app.add_subcommand("verify", "Compare an algorithm against the oracle");
  verify->add_option("-i,--instance", instance_path, "Instance JSON")->required();
  verify->add_option("--algo", algo, "Algorithm to check");
  verify->add_option("--objective", objective, "Objective");
  verify->add_option("--epsilon", epsilon, "FPTAS accuracy");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Cost and disbalance of a given schedule");
  evaluate_cmd->add_option("-i,--instance", instance_path, "Instance JSON")->required();
  evaluate_cmd->add_option("-s,--schedule", schedule_path, "Schedule JSON")->required();
  evaluate_cmd->add_option("--objective", objective, "Objective");

  auto* generate = app.add_subcommand("generate", "Build instances and matrices");
  generate->require_subcommand(1);
  std::string graph_path, edges, a_list;
  int vertices = 0, machines = 2, q = 2, t = 2, n = 8, k_count = 2;
  Weight w_max = 1, denominator = 100;
  std::string density = "1/2";
  std::uint64_t seed = 0;
  bool as_instance = false;
  auto* g_coloring = generate->add_subcommand("coloring", "Graph coloring instance");
  auto* g_maxcut = generate->add_subcommand("maxcut", "Max-Cut instance on two machines");
  for (auto* sub : {g_coloring, g_maxcut}) {
    sub->add_option("--graph", graph_path, "Graph JSON");
    sub->add_option("--vertices", vertices, "Vertex count when edges are given inline");
    sub->add_option("--edges", edges, "Edges as u-v,u-v,...");
    sub->add_option("-o,--output", output_path, "Output file");
  }
  g_coloring->add_option("-m,--machines", machines, "Machines");
  auto* g_partition = generate->add_subcommand("partition3", "Partition-3 reduction instance");
  g_partition->add_option("--a", a_list, "Numbers a_1,...,a_n")->required();
  g_partition->add_option("-m,--machines", machines, "Machines");
  g_partition->add_option("-o,--output", output_path, "Output file");
  auto* g_unsplit = generate->add_subcommand("unsplittable", "Unsplittable matrix A_q^t");
  g_unsplit->add_option("--q", q, "Block size q >= 2");
  g_unsplit->add_option("--t", t, "Level t >= 2");
  g_unsplit->add_flag("--as-instance", as_instance, "Emit the two-machine instance instead");
  g_unsplit->add_option("--denominator", denominator, "Weight scale D for the instance");
  g_unsplit->add_option("-o,--output", output_path, "Output file");
  auto* g_random = generate->add_subcommand("random", "Seeded random instance");
  g_random->add_option("--n", n, "Jobs");
  g_random->add_option("-m,--machines,--m", machines, "Machines");
  g_random->add_option("--K", k_count, "Scenarios");
  g_random->add_option("--wmax", w_max, "Largest weight");
  g_random->add_option("--density", density, "Membership probability, e.g. 1/2");
  g_random->add_option("--seed", seed, "Seed");
  g_random->add_option("-o,--output", output_path, "Output file");

  auto* probe = app.add_subcommand("probe", "Empirical probes");
  probe->require_subcommand(1);
  auto* p_conj = probe->add_subcommand("conjecture", "Best full disbalance over all optimal schedules");
  int trials = 100;
  p_conj->add_option("--n", n, "Jobs");
  p_conj->add_option("--m", machines, "Machines");
  p_conj->add_option("--K", k_count, "Scenarios");
  p_conj->add_option("--trials", trials, "Trials");
  p_conj->add_option("--seed", seed, "First seed");
  p_conj->add_option("--wmax", w_max, "Largest weight");
  p_conj->add_option("--density", density, "Membership probability");

  auto* bench = app.add_subcommand("bench", "CSV benchmark against the oracle");
  std::string suite = "default";
  int count = 10;
  bench->add_option("--suite", suite, "Suite name");
  bench->add_option("--seed", seed, "First seed");
  bench->add_option("--count", count, "Instances per suite");

  auto* balance = app.add_subcommand("balance", "Disbalance tools");
  balance->require_subcommand(1);
  auto* b_eq = balance->add_subcommand("equalize", "Equalize an optimal unit-weight schedule");
  std::string mode = "auto";
  long long custom_f = 0;
  b_eq->add_option("-i,--instance", instance_path, "Instance JSON")->required();
  b_eq->add_option("-s,--schedule", schedule_path, "Schedule JSON")->required();
  b_eq->add_option("--mode", mode, "auto|closed|measured|custom");
  b_eq->add_option("--f", custom_f, "Threshold for --mode custom");
  b_eq->add_option("-o,--output", output_path, "Write the new schedule JSON here");

  std::vector<std::string> argv_storage{"scensched"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const ObjectiveKind kind = objective_or_throw(objective);
      const AlgoParams params = make_params(epsilon);
      const auto start = std::chrono::steady_clock::now();
      const AlgoRun run = run_algorithm(inst, algo, kind, params);
      const double ms = elapsed_ms(start);
      Json p;
      p["epsilon"] = params.epsilon.to_string();
      out << run_record(inst, algo, kind, run, ms, p).dump(2) << "\n";
      if (!output_path.empty()) write_text_file(output_path, schedule_to_json(inst, run.schedule).dump(2) + "\n");
      return 0;
    }
    if (*verify) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const ObjectiveKind kind = objective_or_throw(objective);
      const AlgoParams params = make_params(epsilon);
      const AlgoRun run = run_algorithm(inst, algo, kind, params);
      const OracleResult oracle = brute_force(inst, kind, params.oracle);
      const Rational ratio = ratio_of(run.cost.aggregate, oracle.best_value);
      const auto bound = certified_ratio(inst, algo, kind, params);
      bool ok = !bound || ratio <= *bound;
      Json report;
      report["instance_hash"] = hex64(instance_hash(inst));
      report["algo"] = algo;
      report["objective"] = std::string(to_string(kind));
      report["value"] = cost_to_json(run.cost.aggregate);
      report["oracle_value"] = cost_to_json(oracle.best_value);
      report["ratio"] = ratio.to_string();
      report["bound"] = bound ? Json(bound->to_string()) : Json(nullptr);
      report["exact"] = run.cost.aggregate == oracle.best_value;
      if (algo == "two-scenario") {
        const bool ideal = scenario_costs(inst, run.schedule) == scenario_optima(inst);
        report["ideal"] = ideal;
        ok = ok && ideal;
      }
      report["ok"] = ok;
      out << report.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    if (*evaluate_cmd) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const Schedule sched = schedule_from_json(inst, read_json_file(schedule_path));
      const ObjectiveKind kind = objective_or_throw(objective);
      const CostVector cost = evaluate(inst, sched, kind);
      Json report;
      report["instance_hash"] = hex64(instance_hash(inst));
      report["objective"] = std::string(to_string(kind));
      report["value"] = cost_to_json(cost.aggregate);
      Json per = Json::array();
      for (Cost c : cost.per_scenario) per.push_back(cost_to_json(c));
      report["per_scenario"] = std::move(per);
      report["disbalance"] = disbalance_to_json(disbalance(inst, sched));
      out << report.dump(2) << "\n";
      return 0;
    }
    if (*generate) {
      if (*g_coloring || *g_maxcut) {
        const Graph g = graph_from_flags(graph_path, vertices, edges);
        emit(output_path, instance_to_json(*g_coloring ? gen_coloring(g, machines) : gen_maxcut(g)), out);
      } else if (*g_partition) {
        emit(output_path, instance_to_json(gen_partition3(parse_list(a_list), machines)), out);
      } else if (*g_unsplit) {
        const ScenarioMatrix a = gen_unsplittable(q, t);
        emit(output_path, as_instance ? instance_to_json(matrix_to_instance(a, denominator)) : matrix_to_json(a), out);
      } else {
        auto d = Rational::parse(density);
        if (!d) throw ContractError("cannot parse density '" + density + "'");
        emit(output_path, instance_to_json(gen_random(n, machines, k_count, w_max, *d, seed)), out);
      }
      return 0;
    }
    if (*probe) {
      ProbeOptions options;
      options.n = n;
      options.machines = machines;
      options.scenarios = k_count;
      options.trials = trials;
      options.seed = seed;
      options.w_max = w_max;
      auto d = Rational::parse(density);
      if (!d) throw ContractError("cannot parse density '" + density + "'");
      options.density = *d;
      if (guard_override()) options.max_log2_size = std::numeric_limits<double>::infinity();
      out << probe_to_json(conjecture_probe(options), options).dump(2) << "\n";
      return 0;
    }
    if (*bench) return cmd_bench(suite, seed, count, out);
    if (*balance) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const Schedule sched = schedule_from_json(inst, read_json_file(schedule_path));
      EqualizeAllOptions options;
      if (mode == "auto") {
        options.mode = ThresholdMode::Auto;
      } else if (mode == "closed") {
        options.mode = ThresholdMode::ClosedForm;
      } else if (mode == "measured") {
        options.mode = ThresholdMode::Measured;
      } else if (mode == "custom") {
        options.mode = ThresholdMode::Custom;
        options.custom_f = custom_f;
      } else {
        throw ContractError("unknown threshold mode '" + mode + "'");
      }
      const EqualizeAllResult result = equalize_all(inst, sched, options);
      Json report;
      report["instance_hash"] = hex64(instance_hash(inst));
      report["value_before"] = cost_to_json(evaluate(inst, sched, ObjectiveKind::MinAvgSum).aggregate);
      report["value_after"] = cost_to_json(evaluate(inst, result.schedule, ObjectiveKind::MinAvgSum).aggregate);
      report["f"] = cost_to_json(result.f);
      report["iterations"] = result.iterations;
      report["pair_calls"] = result.pair_calls;
      report["before"] = disbalance_to_json(result.before);
      report["after"] = disbalance_to_json(result.after);
      report["schedule"] = to_input_order(inst, result.schedule);
      out << report.dump(2) << "\n";
      if (!output_path.empty()) write_text_file(output_path, schedule_to_json(inst, result.schedule).dump(2) + "\n");
      return 0;
    }
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return 3;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace scensched
