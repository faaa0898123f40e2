#pragma once

#include "scensched/dp_minmax.hpp"
#include "scensched/model.hpp"

namespace scensched {

/// Exact MinAvg (sum over scenarios) DP for a constant number of machines and
/// scenarios with arbitrary weights.
///
/// The state after j jobs is the m x K count matrix x_ik (jobs of S_k on
/// machine i so far), rows sorted. Placing job j on machine l costs
/// sum over k containing j of w_j * (1 + x_lk).
SolveResult solve_minavg(const Instance& inst, const DpOptions& options = {});

}  // namespace scensched
