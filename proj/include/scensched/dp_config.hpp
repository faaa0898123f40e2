#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scensched/model.hpp"

namespace scensched {

struct ConfigDpOptions {
  /// Maximum number of distinct nonempty job types (scenario profiles).
  int max_types = 8;
  std::size_t max_states = 2'000'000;
  /// Heuristic cap q_T <= ceil(remaining_T / machines_left) + 1. Not exact.
  bool prune_configs = false;
};

/// Jobs grouped by profile: the exact set of scenarios containing them.
struct JobTypes {
  std::vector<std::uint64_t> masks;           // nonempty profiles, ascending
  std::vector<std::vector<int>> jobs;         // canonical jobs of each type, ascending
  std::vector<int> untyped;                   // jobs in no scenario
};

JobTypes group_job_types(const Instance& inst);

/// Jobs per scenario for a machine configuration q (one count per type).
std::vector<int> config_scenario_loads(const JobTypes& types, const std::vector<int>& config,
                                       int scenario_count);

/// Completion-time cost of a configuration in scenario k: n(q,k)(n(q,k)+1)/2.
Cost config_cost(const JobTypes& types, const std::vector<int>& config, int scenario);

/// Exact MinMax or MinAvgSum optimum for unit weights on any number of
/// machines, by DP over (machines used, remaining jobs per type, scenario
/// costs). MinAvgSum keeps only the summed cost. The schedule gives every
/// machine one configuration and fills it with the lowest-indexed free jobs of
/// each type. Throws ContractError on non-unit weights or other objectives,
/// GuardError when the type or state guard is exceeded.
SolveResult solve_config(const Instance& inst, ObjectiveKind kind, const ConfigDpOptions& options = {});

}  // namespace scensched
