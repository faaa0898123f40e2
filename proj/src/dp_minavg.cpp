#include "scensched/dp_minavg.hpp"

#include "detail/row_dp.hpp"

namespace scensched {

SolveResult solve_minavg(const Instance& inst, const DpOptions& options) {
  auto step = [&inst](int job, std::span<Cost> row) -> Cost {
    Cost increment = 0;
    for (int k : inst.scenarios_of(job)) increment += static_cast<Cost>(inst.weight(job)) * ++row[k];
    return increment;
  };
  auto dp = detail::run_row_dp(inst, inst.scenario_count(), step, /*minimize_value=*/true,
                               options.max_states);

  int best_state = 0;
  for (std::size_t s = 1; s < dp.final_values.size(); ++s) {
    if (dp.final_values[s] < dp.final_values[best_state]) best_state = static_cast<int>(s);
  }
  SolveResult result;
  result.schedule = detail::replay_row_dp(inst, dp, best_state, step);
  result.value = dp.final_values[best_state];
  result.peak_states = dp.peak_states;
  return result;
}

}  // namespace scensched
