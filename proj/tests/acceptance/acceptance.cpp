// Acceptance checks. Prints one line per criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scensched/approx.hpp"
#include "scensched/balance.hpp"
#include "scensched/cli.hpp"
#include "scensched/dp_config.hpp"
#include "scensched/dp_minavg.hpp"
#include "scensched/dp_minmax.hpp"
#include "scensched/generators.hpp"
#include "scensched/io.hpp"
#include "scensched/oracle.hpp"
#include "scensched/two_scenario.hpp"
#include "support/reference.hpp"

using namespace scensched;

namespace {

// Collects the first few failures of a criterion.
struct Check {
  int failures = 0;
  int cases = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << " [" << what << "]";
  }
};

std::string str(Cost c) { return to_string(c); }

ref::Raw suite_raw(ref::Lcg& rng, int n_max, int m_max, int k_max, Weight w_max) {
  const int n = 1 + rng.below(n_max);
  const int m = 1 + rng.below(m_max);
  const int k = 1 + rng.below(k_max);
  return ref::random_raw(rng, n, m, k, w_max);
}

std::string describe(const ref::Raw& r) { return instance_to_json(r.build()).dump(); }

// Criterion 1.
void two_scenario_ideality(Check& c) {
  ref::Lcg rng(101);
  for (int t = 0; t < 200; ++t, ++c.cases) {
    const ref::Raw r = ref::random_raw(rng, 1 + rng.below(10), 1 + rng.below(4), 2, 9);
    const Instance inst = r.build();
    const Schedule s = solve_two_scenarios(inst);
    const auto got = ref::costs(r, to_input_order(inst, s));
    for (int k = 0; k < 2; ++k) {
      c.expect(got[k] == ref::single_optimum(r, k) && got[k] == single_scenario_optimum(inst, k),
               "scenario " + std::to_string(k) + " of " + describe(r));
    }
  }
}

// Criterion 2.
void dp_exactness(Check& c) {
  ref::Lcg rng(202);
  for (int t = 0; t < 300; ++t, ++c.cases) {
    const ref::Raw r = suite_raw(rng, 8, 3, 3, 9);
    const Instance inst = r.build();
    const Cost minmax = brute_force(inst, ObjectiveKind::MinMax).best_value;
    const Cost minavg = brute_force(inst, ObjectiveKind::MinAvgSum).best_value;
    const SolveResult p = solve_pseudo(inst, ObjectiveKind::MinMax);
    const SolveResult a = solve_minavg(inst);
    c.expect(p.value == minmax && ref::objective(r, to_input_order(inst, p.schedule), ObjectiveKind::MinMax) == minmax,
             "pseudo " + str(p.value) + " vs " + str(minmax) + " on " + describe(r));
    c.expect(a.value == minavg &&
                 ref::objective(r, to_input_order(inst, a.schedule), ObjectiveKind::MinAvgSum) == minavg,
             "minavg " + str(a.value) + " vs " + str(minavg) + " on " + describe(r));
  }
  ref::Lcg unit(203);
  for (int t = 0; t < 300; ++t, ++c.cases) {
    const ref::Raw r = suite_raw(unit, 10, 4, 3, 1);
    const Instance inst = r.build();
    for (ObjectiveKind kind : {ObjectiveKind::MinMax, ObjectiveKind::MinAvgSum}) {
      const Cost best = brute_force(inst, kind).best_value;
      const SolveResult s = solve_config(inst, kind);
      c.expect(s.value == best && ref::objective(r, to_input_order(inst, s.schedule), kind) == best,
               std::string(to_string(kind)) + " config " + str(s.value) + " vs " + str(best) + " on " + describe(r));
    }
  }
}

// Criterion 3.
void fptas_bound(Check& c) {
  for (const Rational eps : {Rational(1, 2), Rational(1, 10)}) {
    ref::Lcg rng(303);
    for (int t = 0; t < 150; ++t, ++c.cases) {
      const ref::Raw r = suite_raw(rng, 8, 3, 3, 1000);
      const Instance inst = r.build();
      const Cost best = brute_force(inst, ObjectiveKind::MinMax).best_value;
      const FptasResult f = fptas(inst, eps);
      c.expect(f.value == ref::objective(r, to_input_order(inst, f.schedule), ObjectiveKind::MinMax),
               "reported value differs from evaluation");
      c.expect(Rational(f.value) <= (Rational(1) + eps) * Rational(best),
               "value " + str(f.value) + " vs oracle " + str(best) + " on " + describe(r));
      const Cost n = inst.job_count();
      const Rational cap = Rational(inst.machines() * n * n) / eps + Rational(1);
      for (Weight w : f.rounded_weights) c.expect(Rational(w) <= cap, "rounded weight " + str(w));
    }
  }
}

// Criterion 4.
void approximation_ratios(Check& c) {
  ref::Lcg rng(404);
  for (int t = 0; t < 200; ++t, ++c.cases) {
    const ref::Raw r = suite_raw(rng, 7, 3, 3, 9);
    const Instance inst = r.build();
    const Cost best = brute_force(inst, ObjectiveKind::MinAvgSum).best_value;
    const Cost got = evaluate(inst, minavg_derandomized(inst), ObjectiveKind::MinAvgSum).aggregate;
    const Cost m = inst.machines();
    c.expect(Rational(got) <= Rational(3 * m - 1, 2 * m) * Rational(best),
             "derandomized " + str(got) + " vs " + str(best) + " on " + describe(r));

    Cost total = 0;
    Cost count = 0;
    ref::for_each_assignment(r, [&](const std::vector<int>& a) {
      for (Cost v : ref::costs(r, a)) total += v;
      ++count;
    });
    const Rational expected = expected_uniform_cost(inst).total;
    c.expect(expected == Rational(total, count), "expectation on " + describe(r));
    c.expect(Rational(got) <= expected, "derandomized above expectation on " + describe(r));
  }
  ref::Lcg two(405);
  for (int t = 0; t < 200; ++t, ++c.cases) {
    const ref::Raw r = ref::random_raw(two, 1 + two.below(10), 2, 1 + two.below(3), 9);
    const Instance inst = r.build();
    const Cost best = brute_force(inst, ObjectiveKind::MinMax).best_value;
    const Cost got = evaluate(inst, minmax_all_on_one(inst), ObjectiveKind::MinMax).aggregate;
    c.expect(got <= 2 * best, "all-on-one " + str(got) + " vs " + str(best) + " on " + describe(r));
  }
}

// Criterion 5.
void constants(Check& c) {
  const Instance five = Instance::create(2, std::vector<Weight>(5, 1), {{0, 1, 2, 3, 4}});
  const int l = 2;
  c.expect(brute_force(five, ObjectiveKind::MinMax).best_value == (l + 1) * (l + 1), "balanced five jobs");
  c.expect(evaluate(five, minmax_all_on_one(five), ObjectiveKind::MinMax).aggregate == (2 * l + 1) * (l + 1),
           "all-on-one five jobs");
  ++c.cases;

  const Instance edge = gen_maxcut(Graph{2, {{0, 1}}});
  c.expect(evaluate(edge, Schedule{{0, 1}}, ObjectiveKind::MinMax).aggregate == 2, "cut edge");
  c.expect(evaluate(edge, Schedule{{1, 1}}, ObjectiveKind::MinMax).aggregate == 3, "uncut edge");
  ++c.cases;

  for (int q : {2, 3}) {
    const auto a2 = gen_unsplittable(q, 2);
    c.expect(a2.column_sum == q * q - q + 1, "A_q^2 column sum for q=" + std::to_string(q));
    const auto a3 = gen_unsplittable(q, 3);
    c.expect(a3.column_sum == q * q * q - q * q + 2 * q - 1, "A_q^3 column sum for q=" + std::to_string(q));
    c.expect(static_cast<int>(a3.rows.size()) == q * q * q + q, "A_q^3 rows for q=" + std::to_string(q));
    ++c.cases;
  }
  const auto a22 = gen_unsplittable(2, 2);
  c.expect(a22.column_sum == 3, "A_2^2 column sum 3");

  const Instance tight = gen_partition3({1, 1, 1}, 2);
  const Cost tight_value = brute_force(tight, ObjectiveKind::MinMax).best_value;
  c.expect(Rational(tight_value) == partition3_tight_bound({1, 1, 1}, 2),
           "partition (1,1,1) value " + str(tight_value));
  const Instance loose = gen_partition3({1, 1, 2}, 2);
  const Cost loose_value = brute_force(loose, ObjectiveKind::MinMax).best_value;
  c.expect(Rational(loose_value) > partition3_tight_bound({1, 1, 2}, 2),
           "partition (1,1,2) value " + str(loose_value));
  c.cases += 2;
}

// Criterion 6.
void unsplittability(Check& c) {
  for (auto [q, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    const auto a = gen_unsplittable(q, t);
    c.expect(is_unsplittable(a), "A_" + std::to_string(q) + "^" + std::to_string(t) + " splits");
    ++c.cases;
  }
  for (int q : {2, 3}) {
    for (int t : {2, 3}) {
      c.expect(gen_unsplittable(q, t).columns == t * q, "columns of A_q^t");
      ++c.cases;
    }
  }
}

// Irreducible cone points with every entry at most `cap`.
std::set<LatticePoint> minimal_in_box(int k, int cap) {
  const int width = 2 << k;
  std::vector<std::vector<int>> all;
  std::vector<int> v(width, 0);
  while (true) {
    all.push_back(v);
    int i = 0;
    while (i < width && v[i] == cap) v[i++] = 0;
    if (i == width) break;
    ++v[i];
  }
  auto l1 = [](const std::vector<int>& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return l1(a) < l1(b); });
  std::vector<LatticePoint> minimal;
  for (const auto& a : all) {
    if (l1(a) == 0) continue;
    LatticePoint p{std::vector<int>(a.begin(), a.begin() + width / 2), std::vector<int>(a.begin() + width / 2, a.end())};
    if (!in_cone(p, k)) continue;
    if (std::none_of(minimal.begin(), minimal.end(), [&](const auto& b) { return dominated_by(b, p); })) {
      minimal.push_back(p);
    }
  }
  return {minimal.begin(), minimal.end()};
}

bool strictly_decreasing(const std::vector<Cost>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] >= v[i - 1]) return false;
  }
  return true;
}

// Criterion 7.
void disbalance_theory(Check& c) {
  ref::Lcg rng(707);
  for (int t = 0; t < 300; ++t, ++c.cases) {
    const ref::Raw r = suite_raw(rng, 8, 3, 2, 1);
    const Instance inst = r.build();
    const int k = inst.scenario_count();
    const double cap = std::sqrt(static_cast<double>(k)) * std::pow(2.0, k - 1);
    const auto optima = all_optimal_schedules(inst, ObjectiveKind::MinAvgSum);
    const Cost best = evaluate(inst, optima.front(), ObjectiveKind::MinAvgSum).aggregate;
    for (const Schedule& s : optima) {
      for (int d : disbalance(inst, s).final_dk) {
        c.expect(d <= cap, "final disbalance " + std::to_string(d) + " on " + describe(r));
      }
    }
    const Schedule& input = optima.back();
    const EqualizeAllResult all = equalize_all(inst, input);
    c.expect(evaluate(inst, all.schedule, ObjectiveKind::MinAvgSum).aggregate == best,
             "equalize_all changed the objective on " + describe(r));
    c.expect(strictly_decreasing(all.scaled_potentials), "potential did not drop");
    if (inst.machines() >= 2) {
      const EqualizeTwoResult two = equalize_two(inst, input, 0, 1);
      c.expect(evaluate(inst, two.schedule, ObjectiveKind::MinAvgSum).aggregate == best,
               "equalize_two changed the objective on " + describe(r));
      c.expect(two.after.full_f <= two.certified_bound, "equalize_two above its certified bound");
    }
  }

  const auto& b1 = hilbert_basis(1);
  const std::set<LatticePoint> expected1{
      {{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
  c.expect(b1.size() == 3 && std::set<LatticePoint>(b1.begin(), b1.end()) == expected1, "K=1 basis");
  const auto& b2 = hilbert_basis(2);
  c.expect(std::set<LatticePoint>(b2.begin(), b2.end()) == minimal_in_box(2, 4), "K=2 basis vs box search");
  c.cases += 2;
}

// Criterion 8.
void regret_correspondence(Check& c) {
  ref::Lcg rng(808);
  for (int t = 0; t < 150; ++t, ++c.cases) {
    const ref::Raw r = suite_raw(rng, 7, 3, 3, 9);
    const Instance inst = r.build();
    const auto optima = scenario_optima(inst);
    std::map<std::vector<int>, std::pair<Cost, Cost>> values;
    for_each_canonical_schedule(inst, [&](const Schedule& s, std::span<const Cost> per) {
      values[s.assignment] = {aggregate(ObjectiveKind::RegretSum, per, optima),
                              aggregate(ObjectiveKind::MinAvgSum, per, optima)};
    });
    Cost best_regret = values.begin()->second.first;
    Cost best_sum = values.begin()->second.second;
    for (const auto& [a, v] : values) {
      best_regret = std::min(best_regret, v.first);
      best_sum = std::min(best_sum, v.second);
    }
    for (const auto& [a, v] : values) {
      c.expect((v.first == best_regret) == (v.second == best_sum), "argmin sets differ on " + describe(r));
    }
    const Cost regret_max = brute_force(inst, ObjectiveKind::RegretMax).best_value;
    const SolveResult p = solve_pseudo(inst, ObjectiveKind::RegretMax);
    c.expect(p.value == regret_max && ref::optimum(r, ObjectiveKind::RegretMax) == regret_max,
             "regret-max " + str(p.value) + " vs " + str(regret_max) + " on " + describe(r));
  }
}

void drop_times(Json& doc) {
  if (doc.is_object()) {
    doc.erase("time_ms");
    for (auto& [key, value] : doc.items()) drop_times(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) drop_times(value);
  }
}

// Output with timing fields removed: JSON keys and the CSV time column.
std::string stable_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  const std::string text = out.str();
  if (!args.empty() && args[0] == "bench") {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::stringstream cells_in(line);
      for (std::string cell; std::getline(cells_in, cell, ',');) cells.push_back(cell);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 9) kept += cells[i] + ",";
      }
      kept += "\n";
    }
    return kept;
  }
  if (text.empty()) return err.str();
  Json doc = Json::parse(text);
  drop_times(doc);
  return doc.dump();
}

// Criterion 9.
void determinism(Check& c) {
  const auto dir = std::filesystem::temp_directory_path() / "scensched_acceptance";
  std::filesystem::create_directories(dir);
  const std::string weighted = (dir / "weighted.json").string();
  const std::string unit = (dir / "unit.json").string();
  const std::string sched = (dir / "sched.json").string();
  write_text_file(weighted, instance_to_json(gen_random(7, 3, 2, 9, Rational(1, 2), 17)).dump());
  write_text_file(unit, instance_to_json(gen_random(8, 2, 2, 1, Rational(1, 2), 18)).dump());
  int code = 0;
  stable_output({"solve", "-i", unit, "--algo", "config", "--objective", "minavg", "-o", sched}, code);
  c.expect(code == 0, "solve to file");

  const std::vector<std::vector<std::string>> commands = {
      {"solve", "-i", weighted, "--algo", "oracle", "--objective", "minmax"},
      {"solve", "-i", weighted, "--algo", "dp", "--objective", "minavg"},
      {"solve", "-i", weighted, "--algo", "dp", "--objective", "regret-max"},
      {"solve", "-i", weighted, "--algo", "two-scenario"},
      {"solve", "-i", weighted, "--algo", "fptas", "--epsilon", "1/10"},
      {"solve", "-i", weighted, "--algo", "approx-minavg", "--objective", "minavg"},
      {"solve", "-i", unit, "--algo", "approx-minmax2", "--objective", "minmax"},
      {"solve", "-i", unit, "--algo", "config", "--objective", "minmax"},
      {"verify", "-i", weighted, "--algo", "fptas", "--epsilon", "1/2"},
      {"evaluate", "-i", unit, "-s", sched, "--objective", "regret-sum"},
      {"generate", "random", "--n", "9", "--m", "3", "--K", "3", "--wmax", "7", "--seed", "4"},
      {"generate", "coloring", "--vertices", "4", "--edges", "0-1,1-2,2-3", "-m", "3"},
      {"generate", "maxcut", "--vertices", "3", "--edges", "0-1,1-2,0-2"},
      {"generate", "partition3", "--a", "1,2,3", "-m", "3"},
      {"generate", "unsplittable", "--q", "3", "--t", "3", "--as-instance"},
      {"probe", "conjecture", "--n", "6", "--m", "2", "--K", "2", "--trials", "8", "--seed", "2"},
      {"bench", "--suite", "default", "--seed", "1", "--count", "2"},
      {"balance", "equalize", "-i", unit, "-s", sched},
  };
  for (const auto& args : commands) {
    int first_code = 0, second_code = 0;
    const std::string first = stable_output(args, first_code);
    const std::string second = stable_output(args, second_code);
    c.expect(first_code == 0 && first_code == second_code && first == second, args[0] + " " + args[1]);
    ++c.cases;
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed, ++c.cases) {
    const Json a = instance_to_json(gen_random(10, 3, 3, 50, Rational(1, 3), seed));
    const Json b = instance_to_json(gen_random(10, 3, 3, 50, Rational(1, 3), seed));
    c.expect(a == b, "gen_random seed " + std::to_string(seed));
  }
  c.expect(instance_to_json(gen_random(10, 3, 3, 50, Rational(1, 3), 1)) !=
               instance_to_json(gen_random(10, 3, 3, 50, Rational(1, 3), 2)),
           "gen_random ignores its seed");
  const Graph g{5, {{0, 1}, {1, 2}, {3, 4}}};
  c.expect(instance_to_json(gen_coloring(g, 3)) == instance_to_json(gen_coloring(g, 3)), "gen_coloring");
  c.expect(instance_to_json(gen_partition3({2, 1, 3}, 3)) == instance_to_json(gen_partition3({2, 1, 3}, 3)),
           "gen_partition3");
  c.expect(matrix_to_json(gen_unsplittable(2, 3)) == matrix_to_json(gen_unsplittable(2, 3)), "gen_unsplittable");
  ProbeOptions probe;
  probe.n = 6;
  probe.trials = 5;
  probe.seed = 9;
  c.expect(conjecture_probe(probe).trials.back().scenarios == conjecture_probe(probe).trials.back().scenarios,
           "conjecture_probe");
  c.cases += 4;
  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"two-scenario schedules are optimal in both scenarios", two_scenario_ideality},
      {"pseudopolynomial, minavg and configuration DPs match the oracle", dp_exactness},
      {"fptas within 1+eps of the oracle with capped rounded weights", fptas_bound},
      {"derandomized and all-on-one approximation ratios, uniform expectation", approximation_ratios},
      {"reference constants and partition gadget bound", constants},
      {"unsplittable matrices and their column counts", unsplittability},
      {"final disbalance cap, equalizers and Hilbert bases", disbalance_theory},
      {"regret objectives against the plain ones", regret_correspondence},
      {"repeated commands and seeded generators are deterministic", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures == 0;
    if (!ok) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
              << check.cases << " cases, " << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!ok) std::cout << " failures=" << check.failures << check.detail.str();
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
