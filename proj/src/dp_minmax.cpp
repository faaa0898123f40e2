#include "scensched/dp_minmax.hpp"

#include <algorithm>
#include <limits>

#include "detail/row_dp.hpp"
#include "scensched/error.hpp"

namespace scensched {

namespace {

// Row layout: y_0..y_{K-1}, z_0..z_{K-1}.
auto load_cost_step(const Instance& inst) {
  const int k_count = inst.scenario_count();
  return [&inst, k_count](int job, std::span<Cost> row) -> Cost {
    for (int k : inst.scenarios_of(job)) {
      row[k] += 1;
      row[k_count + k] += static_cast<Cost>(inst.weight(job)) * row[k];
    }
    return 0;
  };
}

}  // namespace

SolveResult solve_pseudo(const Instance& inst, ObjectiveKind kind, const DpOptions& options) {
  if (kind != ObjectiveKind::MinMax && kind != ObjectiveKind::RegretMax) {
    throw ContractError("pseudopolynomial DP solves minmax or regret-max only");
  }
  const int k_count = inst.scenario_count();
  const int m = inst.machines();
  auto step = load_cost_step(inst);
  auto dp = detail::run_row_dp(inst, 2 * k_count, step, /*minimize_value=*/false, options.max_states);

  const std::vector<Cost> optima = scenario_optima(inst);
  std::vector<Cost> per_scenario(k_count);
  int best_state = -1;
  Cost best_value = 0;
  for (std::size_t s = 0; s < dp.final_states.size(); ++s) {
    const auto& cells = dp.final_states[s];
    std::fill(per_scenario.begin(), per_scenario.end(), 0);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < k_count; ++k) per_scenario[k] += cells[i * 2 * k_count + k_count + k];
    }
    const Cost value = aggregate(kind, per_scenario, optima);
    if (best_state < 0 || value < best_value) {
      best_state = static_cast<int>(s);
      best_value = value;
    }
  }

  SolveResult result;
  result.schedule = detail::replay_row_dp(inst, dp, best_state, step);
  result.value = best_value;
  result.peak_states = dp.peak_states;
  return result;
}

std::vector<Weight> round_weights(const Instance& inst, const Rational& epsilon) {
  if (epsilon <= Rational(0)) throw ContractError("epsilon must be positive");
  Weight relevant_max = 0;
  for (int j = 0; j < inst.job_count(); ++j) {
    if (!inst.scenarios_of(j).empty()) relevant_max = std::max(relevant_max, inst.weight(j));
  }
  std::vector<Weight> rounded(inst.job_count(), 0);
  if (relevant_max == 0) return rounded;

  // w / unit = w * m * n^2 * q / (W * p) for eps = p/q.
  const Cost n = inst.job_count();
  const Cost scale = static_cast<Cost>(inst.machines()) * n * n * epsilon.denominator();
  const Cost divisor = static_cast<Cost>(relevant_max) * epsilon.numerator();
  for (int j = 0; j < inst.job_count(); ++j) {
    if (inst.scenarios_of(j).empty()) continue;
    auto numerator = checked_mul(static_cast<Cost>(inst.weight(j)), scale);
    if (!numerator) throw GuardError("weight rounding overflows");
    const Cost value = (*numerator + divisor - 1) / divisor;
    if (value > std::numeric_limits<Weight>::max()) throw GuardError("rounded weight overflows");
    rounded[j] = static_cast<Weight>(value);
  }
  return rounded;
}

FptasResult fptas(const Instance& inst, const Rational& epsilon, const DpOptions& options) {
  FptasResult result;
  result.rounded_weights = round_weights(inst, epsilon);
  Weight relevant_max = 0;
  for (int j = 0; j < inst.job_count(); ++j) {
    if (!inst.scenarios_of(j).empty()) relevant_max = std::max(relevant_max, inst.weight(j));
  }
  const Cost n = inst.job_count();
  result.unit = Rational(relevant_max) * epsilon / Rational(static_cast<Cost>(inst.machines()) * n * n);

  // Rounding is monotone, so the rounded instance keeps the canonical order of
  // every job that matters; jobs in no scenario (rounded to 0) may move.
  Instance rounded = Instance::create(inst.machines(), result.rounded_weights, inst.canonical_scenarios());
  SolveResult exact = solve_pseudo(rounded, ObjectiveKind::MinMax, options);

  result.schedule.assignment.resize(inst.job_count());
  for (int j = 0; j < rounded.job_count(); ++j) {
    result.schedule.assignment[rounded.original_order()[j]] = exact.schedule.assignment[j];
  }
  result.rounded_value = exact.value;
  result.value = evaluate(inst, result.schedule, ObjectiveKind::MinMax).aggregate;
  return result;
}

}  // namespace scensched
