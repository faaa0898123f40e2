#include "scensched/dp_config.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "detail/row_dp.hpp"
#include "scensched/error.hpp"

namespace scensched {

JobTypes group_job_types(const Instance& inst) {
  std::map<std::uint64_t, std::vector<int>> by_mask;
  JobTypes types;
  for (int j = 0; j < inst.job_count(); ++j) {
    const std::uint64_t mask = inst.profile_mask(j);
    if (mask == 0) {
      types.untyped.push_back(j);
    } else {
      by_mask[mask].push_back(j);
    }
  }
  for (auto& [mask, jobs] : by_mask) {
    types.masks.push_back(mask);
    types.jobs.push_back(std::move(jobs));
  }
  return types;
}

std::vector<int> config_scenario_loads(const JobTypes& types, const std::vector<int>& config,
                                       int scenario_count) {
  std::vector<int> loads(scenario_count, 0);
  for (std::size_t t = 0; t < types.masks.size(); ++t) {
    for (int k = 0; k < scenario_count; ++k) {
      if (types.masks[t] >> k & 1U) loads[k] += config[t];
    }
  }
  return loads;
}

Cost config_cost(const JobTypes& types, const std::vector<int>& config, int scenario) {
  const Cost load = config_scenario_loads(types, config, scenario + 1)[scenario];
  return load * (load + 1) / 2;
}

namespace {

// State key: remaining count per type, then the cost part (K entries for
// MinMax, one summed entry for MinAvg).
using Key = std::vector<Cost>;

struct Layer {
  std::vector<Key> states;
  std::vector<int> pred;
  std::unordered_map<Key, int, detail::CellsHash> index;
};

}  // namespace

SolveResult solve_config(const Instance& inst, ObjectiveKind kind, const ConfigDpOptions& options) {
  if (kind != ObjectiveKind::MinMax && kind != ObjectiveKind::MinAvgSum) {
    throw ContractError("configuration DP solves minmax or minavg only");
  }
  if (!inst.unit_weights()) throw ContractError("configuration DP requires unit weights");
  if (inst.scenario_count() > 63) throw GuardError("configuration DP supports at most 63 scenarios");

  const JobTypes types = group_job_types(inst);
  const int type_count = static_cast<int>(types.masks.size());
  if (type_count > options.max_types) {
    throw GuardError("configuration DP type guard exceeded: " + std::to_string(type_count) +
                     " job types > " + std::to_string(options.max_types));
  }
  const int k_count = inst.scenario_count();
  const int m = inst.machines();
  const bool minmax = kind == ObjectiveKind::MinMax;
  const int cost_width = minmax ? k_count : 1;

  // Per-scenario loads of a configuration, reused in the inner loop.
  std::vector<std::vector<int>> type_in_scenario(type_count, std::vector<int>(k_count, 0));
  for (int t = 0; t < type_count; ++t) {
    for (int k = 0; k < k_count; ++k) type_in_scenario[t][k] = (types.masks[t] >> k) & 1U;
  }

  std::vector<Layer> layers(m + 1);
  Key start(type_count + cost_width, 0);
  for (int t = 0; t < type_count; ++t) start[t] = static_cast<Cost>(types.jobs[t].size());
  layers[0].states.push_back(start);
  layers[0].pred.push_back(-1);

  std::vector<int> config(type_count);
  std::vector<int> upper(type_count);
  std::vector<Cost> loads(k_count);
  for (int used = 0; used < m; ++used) {
    Layer& from = layers[used];
    Layer& to = layers[used + 1];
    const int machines_left = m - used;
    for (std::size_t s = 0; s < from.states.size(); ++s) {
      const Key& state = from.states[s];
      for (int t = 0; t < type_count; ++t) {
        upper[t] = static_cast<int>(state[t]);
        if (options.prune_configs) {
          upper[t] = std::min(upper[t], (upper[t] + machines_left - 1) / machines_left + 1);
        }
      }
      // The last machine takes everything left.
      const bool last = machines_left == 1;
      if (last) {
        for (int t = 0; t < type_count; ++t) config[t] = static_cast<int>(state[t]);
      } else {
        std::fill(config.begin(), config.end(), 0);
      }
      while (true) {
        std::fill(loads.begin(), loads.end(), 0);
        for (int t = 0; t < type_count; ++t) {
          if (config[t] == 0) continue;
          for (int k = 0; k < k_count; ++k) loads[k] += type_in_scenario[t][k] * config[t];
        }
        Key next = state;
        for (int t = 0; t < type_count; ++t) next[t] -= config[t];
        for (int k = 0; k < k_count; ++k) {
          const Cost c = loads[k] * (loads[k] + 1) / 2;
          next[type_count + (minmax ? k : 0)] += c;
        }
        auto [it, inserted] = to.index.try_emplace(std::move(next), static_cast<int>(to.states.size()));
        if (inserted) {
          to.states.push_back(it->first);
          to.pred.push_back(static_cast<int>(s));
          if (to.states.size() > options.max_states) {
            throw GuardError("configuration DP state guard exceeded at machine " +
                             std::to_string(used + 1));
          }
        }
        if (last) break;
        // Mixed-radix increment of q within [0, upper].
        int t = 0;
        while (t < type_count && config[t] == upper[t]) config[t++] = 0;
        if (t == type_count) break;
        ++config[t];
      }
    }
    // Predecessor layers are only needed for reconstruction.
    from.index.clear();
  }

  const Layer& final_layer = layers[m];
  int best = -1;
  Cost best_value = 0;
  for (std::size_t s = 0; s < final_layer.states.size(); ++s) {
    const Key& state = final_layer.states[s];
    if (std::any_of(state.begin(), state.begin() + type_count, [](Cost c) { return c != 0; })) continue;
    Cost value = 0;
    for (int c = 0; c < cost_width; ++c) {
      value = minmax ? std::max(value, state[type_count + c]) : value + state[type_count + c];
    }
    if (best < 0 || value < best_value) {
      best = static_cast<int>(s);
      best_value = value;
    }
  }
  if (best < 0) throw std::logic_error("configuration DP found no complete assignment");

  // Walk back to recover one configuration per machine, then materialize.
  std::vector<std::vector<int>> configs(m, std::vector<int>(type_count, 0));
  int state = best;
  for (int used = m; used >= 1; --used) {
    const int prev = layers[used].pred[state];
    for (int t = 0; t < type_count; ++t) {
      configs[used - 1][t] =
          static_cast<int>(layers[used - 1].states[prev][t] - layers[used].states[state][t]);
    }
    state = prev;
  }

  SolveResult result;
  result.schedule.assignment.assign(inst.job_count(), 0);
  std::vector<std::size_t> next_job(type_count, 0);
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < type_count; ++t) {
      for (int c = 0; c < configs[i][t]; ++c) result.schedule.assignment[types.jobs[t][next_job[t]++]] = i;
    }
  }
  result.value = best_value;
  for (const Layer& layer : layers) result.peak_states = std::max(result.peak_states, layer.states.size());
  return result;
}

}  // namespace scensched
