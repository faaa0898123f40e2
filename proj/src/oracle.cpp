#include "scensched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scensched/error.hpp"

namespace scensched {

namespace {

// Depth-first enumeration of restricted-growth assignments with incremental
// per-scenario costs.
template <typename Leaf>
void enumerate(const Instance& inst, Leaf&& leaf) {
  const int n = inst.job_count();
  const int m = inst.machines();
  const int k_count = inst.scenario_count();

  Schedule sched;
  sched.assignment.assign(n, 0);
  std::vector<Cost> count(static_cast<std::size_t>(m) * k_count, 0);
  std::vector<Cost> cost(k_count, 0);

  auto place = [&](int j, int machine, int sign) {
    const auto row = static_cast<std::size_t>(machine) * k_count;
    for (int k : inst.scenarios_of(j)) {
      if (sign > 0) {
        cost[k] += static_cast<Cost>(inst.weight(j)) * ++count[row + k];
      } else {
        cost[k] -= static_cast<Cost>(inst.weight(j)) * count[row + k]--;
      }
    }
  };

  auto recurse = [&](auto&& self, int j, int used) -> void {
    if (j == n) {
      leaf(sched, std::span<const Cost>(cost));
      return;
    }
    const int limit = std::min(used + 1, m);
    for (int machine = 0; machine < limit; ++machine) {
      sched.assignment[j] = machine;
      place(j, machine, +1);
      self(self, j + 1, std::max(used, machine + 1));
      place(j, machine, -1);
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace

void check_enumeration_guard(const Instance& inst, const OracleOptions& options) {
  if (options.unlimited) return;
  const double size = inst.job_count() * std::log2(static_cast<double>(inst.machines()));
  if (size > options.max_log2_size) {
    throw GuardError("instance too large to enumerate: n*log2(m) = " + std::to_string(size) +
                     " exceeds " + std::to_string(options.max_log2_size));
  }
}

void for_each_canonical_schedule(
    const Instance& inst,
    const std::function<void(const Schedule&, std::span<const Cost>)>& visit,
    const OracleOptions& options) {
  check_enumeration_guard(inst, options);
  enumerate(inst, visit);
}

OracleResult brute_force(const Instance& inst, ObjectiveKind kind, const OracleOptions& options) {
  check_enumeration_guard(inst, options);
  const std::vector<Cost> optima = scenario_optima(inst);
  OracleResult result;
  bool found = false;
  enumerate(inst, [&](const Schedule& sched, std::span<const Cost> per_scenario) {
    const Cost value = aggregate(kind, per_scenario, optima);
    if (!found || value < result.best_value) {
      found = true;
      result.best_value = value;
      result.best_schedule = sched;
      result.optima_count = 1;
    } else if (value == result.best_value) {
      ++result.optima_count;
    }
  });
  return result;
}

std::vector<Schedule> all_optimal_schedules(const Instance& inst, ObjectiveKind kind,
                                            const OracleOptions& options) {
  check_enumeration_guard(inst, options);
  const std::vector<Cost> optima = scenario_optima(inst);
  std::vector<Schedule> best;
  Cost best_value = 0;
  enumerate(inst, [&](const Schedule& sched, std::span<const Cost> per_scenario) {
    const Cost value = aggregate(kind, per_scenario, optima);
    if (best.empty() || value < best_value) {
      best.clear();
      best_value = value;
    }
    if (value == best_value) best.push_back(sched);
  });
  return best;
}

std::int64_t canonical_schedule_count(int n, int m) {
  // S(j, b) via the usual recurrence, summed over b <= m.
  std::vector<std::int64_t> row(m + 1, 0);
  row[0] = 1;
  for (int j = 1; j <= n; ++j) {
    for (int b = std::min(j, m); b >= 1; --b) row[b] = b * row[b] + row[b - 1];
    row[0] = 0;
  }
  std::int64_t total = 0;
  for (int b = 1; b <= m; ++b) total += row[b];
  return n == 0 ? 1 : total;
}

UniformExpectation expected_uniform_cost(const Instance& inst) {
  UniformExpectation result;
  result.per_scenario.assign(inst.scenario_count(), Rational(0));
  for (int k = 0; k < inst.scenario_count(); ++k) {
    Cost rank = 0;
    Rational sum(0);
    for (int j : inst.scenario_jobs(k)) {
      sum += Rational(inst.weight(j)) * Rational(inst.machines() + rank, inst.machines());
      ++rank;
    }
    result.per_scenario[k] = sum;
    result.total += sum;
  }
  return result;
}

}  // namespace scensched
