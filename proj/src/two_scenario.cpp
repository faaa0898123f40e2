#include "scensched/two_scenario.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "scensched/error.hpp"

namespace scensched {

namespace {

// Relative loads of one scenario in logical machine order. The zero entries
// always form the contiguous block [low, high].
struct RelativeLoad {
  std::vector<int> s;
  int low = 0;
  int high = 0;

  explicit RelativeLoad(int m) : s(m, 0), high(m - 1) {}
  bool all_ones() const { return low > high; }
};

class TwoScenarioBuilder {
 public:
  explicit TwoScenarioBuilder(int m) : m_(m), loads_{RelativeLoad(m), RelativeLoad(m)}, perm_(m) {
    std::iota(perm_.begin(), perm_.end(), 0);
  }

  int place_single(int k) {
    auto& load = loads_[k];
    const int logical = load.low;
    require_zero(k, logical);
    load.s[logical] = 1;
    ++load.low;
    return perm_[logical];
  }

  int place_common() {
    if (loads_[0].high != loads_[1].high) {
      throw std::logic_error("two-scenario invariant broken: nu1 != nu2 at a common job");
    }
    const int logical = loads_[0].high;
    require_zero(0, logical);
    require_zero(1, logical);
    for (auto& load : loads_) {
      load.s[logical] = 1;
      --load.high;
    }
    return perm_[logical];
  }

  int first_machine() const { return perm_[0]; }

  // Post-placement reset rule, checked for s1 first.
  void maybe_reset(TwoScenarioStats& stats) {
    for (int k = 0; k < 2; ++k) {
      if (!loads_[k].all_ones()) continue;
      reset(k);
      (k == 0 ? stats.resets_first : stats.resets_second)++;
    }
  }

 private:
  void require_zero(int k, int logical) const {
    if (logical < 0 || logical >= m_ || loads_[k].s[logical] != 0) {
      throw std::logic_error("two-scenario invariant broken: target machine is not least loaded");
    }
  }

  // Clears scenario k and relabels so the other scenario's ones come first.
  void reset(int k) {
    auto& cleared = loads_[k];
    auto& other = loads_[1 - k];
    std::fill(cleared.s.begin(), cleared.s.end(), 0);
    cleared.low = 0;
    cleared.high = m_ - 1;

    // Other scenario: ones at [0, low) and (high, m), zeros at [low, high].
    std::vector<int> relabelled;
    relabelled.reserve(m_);
    for (int i = 0; i < other.low; ++i) relabelled.push_back(perm_[i]);
    for (int i = other.high + 1; i < m_; ++i) relabelled.push_back(perm_[i]);
    for (int i = other.low; i <= other.high; ++i) relabelled.push_back(perm_[i]);
    perm_ = std::move(relabelled);

    const int ones = other.low + (m_ - 1 - other.high);
    for (int i = 0; i < m_; ++i) other.s[i] = i < ones ? 1 : 0;
    other.low = ones;
    other.high = m_ - 1;
  }

  int m_;
  std::array<RelativeLoad, 2> loads_;
  std::vector<int> perm_;  // logical label -> physical machine
};

}  // namespace

Schedule solve_two_scenarios(const Instance& inst, TwoScenarioStats* stats) {
  if (inst.scenario_count() != 2) {
    throw ContractError("two-scenario requires K=2 (instance has K=" +
                        std::to_string(inst.scenario_count()) + ")");
  }
  TwoScenarioStats local;
  TwoScenarioStats& out = stats ? *stats : local;
  out = {};

  TwoScenarioBuilder builder(inst.machines());
  Schedule sched;
  sched.assignment.resize(inst.job_count());
  for (int j = 0; j < inst.job_count(); ++j) {
    const bool in_first = inst.in_scenario(j, 0);
    const bool in_second = inst.in_scenario(j, 1);
    if (in_first && in_second) {
      sched.assignment[j] = builder.place_common();
    } else if (in_first) {
      sched.assignment[j] = builder.place_single(0);
    } else if (in_second) {
      sched.assignment[j] = builder.place_single(1);
    } else {
      sched.assignment[j] = builder.first_machine();
      ++out.jobs_in_neither;
      continue;
    }
    builder.maybe_reset(out);
  }
  return sched;
}

}  // namespace scensched
