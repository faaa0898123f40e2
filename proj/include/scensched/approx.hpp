#pragma once

#include "scensched/model.hpp"

namespace scensched {

/// Every job on machine 0. A 2-approximation for MinMax on two machines.
/// Throws ContractError unless m = 2.
Schedule minmax_all_on_one(const Instance& inst);

/// Derandomized uniform assignment for MinAvgSum.
///
/// Under uniform random placement of the remaining jobs, the expected cost of
/// later jobs does not depend on where job j goes, so the conditional
/// expectation is minimized by the machine with the least
/// sum over k containing j of w_j * (earlier S_k jobs on it). Ties go to the
/// lowest machine. The result costs at most the uniform expectation, which is
/// within 3/2 - 1/(2m) of the sum of the scenario optima.
Schedule minavg_derandomized(const Instance& inst);

}  // namespace scensched
