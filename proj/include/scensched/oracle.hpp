#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "scensched/model.hpp"
#include "scensched/rational.hpp"

namespace scensched {

struct OracleOptions {
  /// Enumeration is refused when n * log2(m) exceeds this.
  double max_log2_size = 32.0;
  bool unlimited = false;
};

struct OracleResult {
  Cost best_value = 0;
  Schedule best_schedule;
  /// Number of canonical (first-use labelled) optimal schedules.
  std::int64_t optima_count = 0;
};

/// Throws GuardError if the instance is too large to enumerate.
void check_enumeration_guard(const Instance& inst, const OracleOptions& options);

/// Calls `visit` for every assignment in canonical form: machine labels are
/// introduced in first-use order, so each partition of the jobs into at most m
/// blocks is visited exactly once. Order is lexicographic in the assignment.
void for_each_canonical_schedule(
    const Instance& inst,
    const std::function<void(const Schedule&, std::span<const Cost> per_scenario)>& visit,
    const OracleOptions& options = {});

/// Exact optimum by exhaustive canonical enumeration. The returned schedule is
/// the lexicographically first optimal one.
OracleResult brute_force(const Instance& inst, ObjectiveKind kind,
                         const OracleOptions& options = {});

/// Every canonical optimal schedule, in enumeration order.
std::vector<Schedule> all_optimal_schedules(const Instance& inst, ObjectiveKind kind,
                                            const OracleOptions& options = {});

/// Number of set partitions of n jobs into at most m blocks.
std::int64_t canonical_schedule_count(int n, int m);

struct UniformExpectation {
  std::vector<Rational> per_scenario;
  Rational total;
};

/// Exact expected cost when every job picks a machine uniformly at random: the
/// r-th job of a scenario (canonical order) expects 1 + (r-1)/m positions.
UniformExpectation expected_uniform_cost(const Instance& inst);

}  // namespace scensched
