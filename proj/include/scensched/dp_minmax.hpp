#pragma once

#include <cstddef>
#include <vector>

#include "scensched/model.hpp"
#include "scensched/rational.hpp"

namespace scensched {

struct DpOptions {
  /// Maximum number of states in one DP layer before GuardError.
  std::size_t max_states = 2'000'000;
};

/// Exact pseudopolynomial DP for MinMax or RegretMax.
///
/// A state records, per machine and scenario, the job count y and the
/// accumulated weighted completion time z of the prefix placed so far.
/// Placing job j on machine i adds one to y_ik and w_j * y_ik (new value) to
/// z_ik for every scenario k containing j. Only reachable states are kept and
/// rows are sorted so machine relabelings collapse to one state. Throws
/// ContractError for other objectives and GuardError when a layer outgrows
/// `options.max_states`.
SolveResult solve_pseudo(const Instance& inst, ObjectiveKind kind, const DpOptions& options = {});

struct FptasResult {
  Schedule schedule;
  /// Value of `schedule` under the original weights.
  Cost value = 0;
  /// Optimal MinMax value of the rounded instance.
  Cost rounded_value = 0;
  /// Rounded weight of every canonical job of the original instance.
  std::vector<Weight> rounded_weights;
  /// Rounding unit W*eps/(m n^2).
  Rational unit;
};

/// Rounds w_j to ceil(w_j / unit) with unit = W*eps/(m n^2), W the largest
/// weight of a job that appears in some scenario. Jobs in no scenario round
/// to 0. Throws ContractError if eps <= 0.
std::vector<Weight> round_weights(const Instance& inst, const Rational& epsilon);

/// MinMax FPTAS: exact DP on the rounded instance, evaluated with the
/// original weights. Value <= (1 + eps) * OPT.
FptasResult fptas(const Instance& inst, const Rational& epsilon, const DpOptions& options = {});

}  // namespace scensched
