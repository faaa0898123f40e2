#include "scensched/approx.hpp"

#include "scensched/error.hpp"

namespace scensched {

Schedule minmax_all_on_one(const Instance& inst) {
  if (inst.machines() != 2) {
    throw ContractError("all-on-one approximation requires m=2 (instance has m=" +
                        std::to_string(inst.machines()) + ")");
  }
  return Schedule{std::vector<int>(inst.job_count(), 0)};
}

Schedule minavg_derandomized(const Instance& inst) {
  const int m = inst.machines();
  const int k_count = inst.scenario_count();
  std::vector<Cost> counts(static_cast<std::size_t>(m) * k_count, 0);
  Schedule sched{std::vector<int>(inst.job_count(), 0)};
  for (int j = 0; j < inst.job_count(); ++j) {
    int best = 0;
    Cost best_cost = 0;
    for (int i = 0; i < m; ++i) {
      Cost cost = 0;
      for (int k : inst.scenarios_of(j)) cost += counts[static_cast<std::size_t>(i) * k_count + k];
      cost *= inst.weight(j);
      if (i == 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    sched.assignment[j] = best;
    for (int k : inst.scenarios_of(j)) ++counts[static_cast<std::size_t>(best) * k_count + k];
  }
  return sched;
}

}  // namespace scensched
