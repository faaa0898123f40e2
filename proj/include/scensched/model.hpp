#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scensched/integer.hpp"

namespace scensched {

enum class ObjectiveKind { MinMax, MinAvgSum, RegretMax, RegretSum };

std::string_view to_string(ObjectiveKind kind);

/// Accepts the CLI spellings: minmax, minavg, regret-max, regret-sum.
std::optional<ObjectiveKind> parse_objective(std::string_view text);

/// A scheduling instance in canonical form.
///
/// Jobs are stored sorted by non-increasing weight, ties broken by input
/// index. Every prefix-based quantity in the library (evaluation order,
/// disbalance prefixes, DP stages) uses this canonical order. Weights play the
/// role of processing times: a job with processing time p becomes a unit job
/// of weight p processed in reverse order.
class Instance {
 public:
  /// Builds an instance from weights (or processing times) and scenarios given
  /// as lists of 0-based input job indices. Throws ContractError on empty job
  /// lists, m < 1, K < 1, out-of-range or duplicate indices, negative weights,
  /// and GuardError when K * n^2 * W does not fit the cost type.
  static Instance create(int machines, std::vector<Weight> weights,
                         const std::vector<std::vector<int>>& scenarios);

  int machines() const { return machines_; }
  int job_count() const { return static_cast<int>(weights_.size()); }
  int scenario_count() const { return static_cast<int>(scenario_jobs_.size()); }

  Weight weight(int job) const { return weights_[job]; }
  std::span<const Weight> weights() const { return weights_; }

  bool in_scenario(int job, int scenario) const {
    return membership_[static_cast<std::size_t>(job) * scenario_count() + scenario] != 0;
  }
  /// Scenarios containing the job, ascending.
  std::span<const int> scenarios_of(int job) const { return job_scenarios_[job]; }
  /// Canonical indices of the jobs in a scenario, ascending.
  std::span<const int> scenario_jobs(int scenario) const { return scenario_jobs_[scenario]; }

  /// original_order()[j] is the input index of canonical job j.
  std::span<const int> original_order() const { return original_order_; }

  /// Scenarios of a job as a bitmask (bit k set iff the job is in S_k).
  /// Requires K <= 63.
  std::uint64_t profile_mask(int job) const;

  Weight max_weight() const { return weights_.empty() ? 0 : weights_.front(); }
  bool unit_weights() const;

  /// Scenario lists in canonical indices (useful to derive new instances).
  std::vector<std::vector<int>> canonical_scenarios() const;

 private:
  int machines_ = 1;
  std::vector<Weight> weights_;
  std::vector<int> original_order_;
  std::vector<std::uint8_t> membership_;
  std::vector<std::vector<int>> job_scenarios_;
  std::vector<std::vector<int>> scenario_jobs_;
};

/// Observation-1 entry point: processing times become weights.
Instance from_processing_times(std::vector<Weight> processing_times, int machines,
                               const std::vector<std::vector<int>>& scenarios);

/// A total assignment of canonical jobs to machines 0..m-1.
struct Schedule {
  std::vector<int> assignment;

  bool operator==(const Schedule&) const = default;
};

/// Throws ContractError unless the schedule assigns every job of `inst` to a
/// machine in range.
void validate(const Instance& inst, const Schedule& sched);

/// Assignment listed in input job order.
std::vector<int> to_input_order(const Instance& inst, const Schedule& sched);
Schedule from_input_order(const Instance& inst, std::span<const int> assignment);

struct CostVector {
  ObjectiveKind kind = ObjectiveKind::MinMax;
  std::vector<Cost> per_scenario;
  Cost aggregate = 0;
};

Cost evaluate_scenario(const Instance& inst, const Schedule& sched, int scenario);

/// Per-scenario total completion times, one pass over the jobs.
std::vector<Cost> scenario_costs(const Instance& inst, const Schedule& sched);

CostVector evaluate(const Instance& inst, const Schedule& sched, ObjectiveKind kind);

/// Round-robin optimum of one scenario: sum over ranks r of w_(r) * ceil(r/m).
Cost single_scenario_optimum(const Instance& inst, int scenario);
std::vector<Cost> scenario_optima(const Instance& inst);

/// Folds per-scenario costs into the objective value. `optima` is only read
/// for the regret objectives.
Cost aggregate(ObjectiveKind kind, std::span<const Cost> per_scenario,
               std::span<const Cost> optima);

struct DisbalanceReport {
  std::vector<int> final_dk;
  std::vector<int> full_fk;
  int final_d = 0;
  int full_f = 0;
};

DisbalanceReport disbalance(const Instance& inst, const Schedule& sched);

/// Disbalance restricted to the two machines `first` and `second`.
DisbalanceReport pairwise_disbalance(const Instance& inst, const Schedule& sched,
                                     int first, int second);

/// Output of the exact and approximate solvers.
struct SolveResult {
  Schedule schedule;
  Cost value = 0;
  /// Largest DP layer (0 for non-DP algorithms).
  std::size_t peak_states = 0;
};

/// MinAvgSum value for unit weights from per-machine scenario counts only.
Cost unit_minavg_from_counts(const Instance& inst, const Schedule& sched);

}  // namespace scensched
