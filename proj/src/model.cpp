#include "scensched/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "scensched/error.hpp"

namespace scensched {

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::MinMax: return "minmax";
    case ObjectiveKind::MinAvgSum: return "minavg";
    case ObjectiveKind::RegretMax: return "regret-max";
    case ObjectiveKind::RegretSum: return "regret-sum";
  }
  return "unknown";
}

std::optional<ObjectiveKind> parse_objective(std::string_view text) {
  if (text == "minmax") return ObjectiveKind::MinMax;
  if (text == "minavg" || text == "minavg-sum") return ObjectiveKind::MinAvgSum;
  if (text == "regret-max") return ObjectiveKind::RegretMax;
  if (text == "regret-sum") return ObjectiveKind::RegretSum;
  return std::nullopt;
}

Instance Instance::create(int machines, std::vector<Weight> weights,
                          const std::vector<std::vector<int>>& scenarios) {
  const int n = static_cast<int>(weights.size());
  const int k_count = static_cast<int>(scenarios.size());
  if (n < 1) throw ContractError("instance needs at least one job");
  if (machines < 1) throw ContractError("instance needs at least one machine");
  if (k_count < 1) throw ContractError("instance needs at least one scenario");
  for (Weight w : weights) {
    if (w < 0) throw ContractError("job weights must be nonnegative");
  }

  Instance inst;
  inst.machines_ = machines;
  inst.original_order_.resize(n);
  std::iota(inst.original_order_.begin(), inst.original_order_.end(), 0);
  std::stable_sort(inst.original_order_.begin(), inst.original_order_.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });

  std::vector<int> canonical_of(n);
  inst.weights_.resize(n);
  for (int j = 0; j < n; ++j) {
    canonical_of[inst.original_order_[j]] = j;
    inst.weights_[j] = weights[inst.original_order_[j]];
  }

  inst.membership_.assign(static_cast<std::size_t>(n) * k_count, 0);
  inst.scenario_jobs_.resize(k_count);
  inst.job_scenarios_.resize(n);
  for (int k = 0; k < k_count; ++k) {
    for (int id : scenarios[k]) {
      if (id < 0 || id >= n) {
        throw ContractError("scenario " + std::to_string(k) + " references job " +
                            std::to_string(id) + " outside [0, " + std::to_string(n) + ")");
      }
      auto& cell = inst.membership_[static_cast<std::size_t>(canonical_of[id]) * k_count + k];
      if (cell != 0) {
        throw ContractError("scenario " + std::to_string(k) + " lists job " +
                            std::to_string(id) + " twice");
      }
      cell = 1;
      inst.scenario_jobs_[k].push_back(canonical_of[id]);
    }
    std::sort(inst.scenario_jobs_[k].begin(), inst.scenario_jobs_[k].end());
    for (int j : inst.scenario_jobs_[k]) inst.job_scenarios_[j].push_back(k);
  }

  // Worst case: every scenario holds every job on one machine.
  Cost bound = static_cast<Cost>(n) * n;
  auto scaled = checked_mul(bound, std::max<Weight>(inst.max_weight(), 1));
  if (scaled) scaled = checked_mul(*scaled, k_count);
  if (!scaled) throw GuardError("worst-case cost K*n^2*W overflows 128-bit arithmetic");
  return inst;
}

Instance from_processing_times(std::vector<Weight> processing_times, int machines,
                               const std::vector<std::vector<int>>& scenarios) {
  return Instance::create(machines, std::move(processing_times), scenarios);
}

std::uint64_t Instance::profile_mask(int job) const {
  if (scenario_count() > 63) throw ContractError("profile masks need K <= 63");
  std::uint64_t mask = 0;
  for (int k : job_scenarios_[job]) mask |= std::uint64_t{1} << k;
  return mask;
}

bool Instance::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
}

std::vector<std::vector<int>> Instance::canonical_scenarios() const {
  return scenario_jobs_;
}

void validate(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.assignment.size()) != inst.job_count()) {
    throw ContractError("schedule has " + std::to_string(sched.assignment.size()) +
                        " entries, instance has " + std::to_string(inst.job_count()) + " jobs");
  }
  for (int machine : sched.assignment) {
    if (machine < 0 || machine >= inst.machines()) {
      throw ContractError("schedule uses machine " + std::to_string(machine) +
                          " outside [0, " + std::to_string(inst.machines()) + ")");
    }
  }
}

std::vector<int> to_input_order(const Instance& inst, const Schedule& sched) {
  std::vector<int> out(sched.assignment.size());
  for (int j = 0; j < inst.job_count(); ++j) out[inst.original_order()[j]] = sched.assignment[j];
  return out;
}

Schedule from_input_order(const Instance& inst, std::span<const int> assignment) {
  if (static_cast<int>(assignment.size()) != inst.job_count()) {
    throw ContractError("assignment length does not match the job count");
  }
  Schedule sched;
  sched.assignment.resize(assignment.size());
  for (int j = 0; j < inst.job_count(); ++j) {
    sched.assignment[j] = assignment[inst.original_order()[j]];
  }
  validate(inst, sched);
  return sched;
}

Cost evaluate_scenario(const Instance& inst, const Schedule& sched, int scenario) {
  if (scenario < 0 || scenario >= inst.scenario_count()) {
    throw ContractError("scenario index " + std::to_string(scenario) + " out of range");
  }
  validate(inst, sched);
  std::vector<Cost> count(inst.machines(), 0);
  Cost total = 0;
  for (int j : inst.scenario_jobs(scenario)) {
    total += static_cast<Cost>(inst.weight(j)) * ++count[sched.assignment[j]];
  }
  return total;
}

std::vector<Cost> scenario_costs(const Instance& inst, const Schedule& sched) {
  validate(inst, sched);
  const int k_count = inst.scenario_count();
  std::vector<Cost> count(static_cast<std::size_t>(inst.machines()) * k_count, 0);
  std::vector<Cost> costs(k_count, 0);
  for (int j = 0; j < inst.job_count(); ++j) {
    const auto row = static_cast<std::size_t>(sched.assignment[j]) * k_count;
    for (int k : inst.scenarios_of(j)) costs[k] += static_cast<Cost>(inst.weight(j)) * ++count[row + k];
  }
  return costs;
}

Cost single_scenario_optimum(const Instance& inst, int scenario) {
  if (scenario < 0 || scenario >= inst.scenario_count()) {
    throw ContractError("scenario index " + std::to_string(scenario) + " out of range");
  }
  Cost total = 0;
  Cost rank = 0;
  for (int j : inst.scenario_jobs(scenario)) {
    total += static_cast<Cost>(inst.weight(j)) * (rank / inst.machines() + 1);
    ++rank;
  }
  return total;
}

std::vector<Cost> scenario_optima(const Instance& inst) {
  std::vector<Cost> optima(inst.scenario_count());
  for (int k = 0; k < inst.scenario_count(); ++k) optima[k] = single_scenario_optimum(inst, k);
  return optima;
}

Cost aggregate(ObjectiveKind kind, std::span<const Cost> per_scenario,
               std::span<const Cost> optima) {
  Cost value = 0;
  switch (kind) {
    case ObjectiveKind::MinMax:
      for (Cost c : per_scenario) value = std::max(value, c);
      return value;
    case ObjectiveKind::MinAvgSum:
      for (Cost c : per_scenario) value += c;
      return value;
    case ObjectiveKind::RegretMax:
      for (std::size_t k = 0; k < per_scenario.size(); ++k) {
        value = std::max(value, per_scenario[k] - optima[k]);
      }
      return value;
    case ObjectiveKind::RegretSum:
      for (std::size_t k = 0; k < per_scenario.size(); ++k) value += per_scenario[k] - optima[k];
      return value;
  }
  return value;
}

CostVector evaluate(const Instance& inst, const Schedule& sched, ObjectiveKind kind) {
  CostVector result;
  result.kind = kind;
  result.per_scenario = scenario_costs(inst, sched);
  std::vector<Cost> optima;
  if (kind == ObjectiveKind::RegretMax || kind == ObjectiveKind::RegretSum) {
    optima = scenario_optima(inst);
  }
  result.aggregate = aggregate(kind, result.per_scenario, optima);
  return result;
}

namespace {

DisbalanceReport disbalance_over(const Instance& inst, const Schedule& sched,
                                 std::span<const int> machines) {
  validate(inst, sched);
  const int k_count = inst.scenario_count();
  std::vector<int> slot(inst.machines(), -1);
  for (std::size_t s = 0; s < machines.size(); ++s) slot[machines[s]] = static_cast<int>(s);

  const auto width = machines.size();
  std::vector<int> count(width * k_count, 0);
  DisbalanceReport report;
  report.final_dk.assign(k_count, 0);
  report.full_fk.assign(k_count, 0);

  auto spread = [&](int k) {
    int lo = count[k];
    int hi = count[k];
    for (std::size_t s = 1; s < width; ++s) {
      lo = std::min(lo, count[s * k_count + k]);
      hi = std::max(hi, count[s * k_count + k]);
    }
    return hi - lo;
  };

  // Spreads only change in the scenarios of the job just placed.
  for (int j = 0; j < inst.job_count(); ++j) {
    int s = slot[sched.assignment[j]];
    if (s < 0) continue;
    for (int k : inst.scenarios_of(j)) {
      ++count[static_cast<std::size_t>(s) * k_count + k];
      report.full_fk[k] = std::max(report.full_fk[k], spread(k));
    }
  }
  for (int k = 0; k < k_count; ++k) {
    report.final_dk[k] = spread(k);
    report.final_d = std::max(report.final_d, report.final_dk[k]);
    report.full_f = std::max(report.full_f, report.full_fk[k]);
  }
  return report;
}

}  // namespace

DisbalanceReport disbalance(const Instance& inst, const Schedule& sched) {
  std::vector<int> all(inst.machines());
  std::iota(all.begin(), all.end(), 0);
  return disbalance_over(inst, sched, all);
}

DisbalanceReport pairwise_disbalance(const Instance& inst, const Schedule& sched,
                                     int first, int second) {
  if (first == second) throw ContractError("pairwise disbalance needs two distinct machines");
  if (first < 0 || second < 0 || first >= inst.machines() || second >= inst.machines()) {
    throw ContractError("machine index out of range");
  }
  const int pair[] = {first, second};
  return disbalance_over(inst, sched, pair);
}

Cost unit_minavg_from_counts(const Instance& inst, const Schedule& sched) {
  validate(inst, sched);
  const int k_count = inst.scenario_count();
  std::vector<Cost> count(static_cast<std::size_t>(inst.machines()) * k_count, 0);
  for (int j = 0; j < inst.job_count(); ++j) {
    for (int k : inst.scenarios_of(j)) ++count[static_cast<std::size_t>(sched.assignment[j]) * k_count + k];
  }
  Cost total = 0;
  for (Cost c : count) total += c * (c + 1) / 2;
  return total;
}

}  // namespace scensched
