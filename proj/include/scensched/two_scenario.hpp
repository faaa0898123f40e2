#pragma once

#include "scensched/model.hpp"

namespace scensched {

struct TwoScenarioStats {
  int resets_first = 0;
  int resets_second = 0;
  int jobs_in_neither = 0;
};

/// Builds a schedule that is optimal for both scenarios at once (K = 2).
///
/// Jobs are placed in canonical order onto a machine whose relative load is
/// zero in every scenario containing the job: first-scenario-only jobs fill
/// from the low end of the zero block of s1, second-only jobs from the low end
/// of s2, and common jobs from the shared high end. When a relative-load
/// vector becomes all ones it is reset and the machines are relabelled so the
/// other vector reads (1,...,1,0,...,0). Relabelling is a logical
/// permutation; placed jobs never move. Jobs in neither scenario go to the
/// machine currently labelled first.
///
/// Throws ContractError unless K = 2. Linear in n (plus O(m) per reset).
Schedule solve_two_scenarios(const Instance& inst, TwoScenarioStats* stats = nullptr);

}  // namespace scensched
