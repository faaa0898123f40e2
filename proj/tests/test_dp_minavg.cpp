#include <doctest.h>

#include "scensched/dp_minavg.hpp"
#include "scensched/error.hpp"
#include "support/reference.hpp"

using namespace scensched;

TEST_CASE("one scenario gives the classical optimum") {
  ref::Lcg rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = ref::random_raw(rng, 9, 1 + trial % 4, 1, 15).build();
    CHECK(solve_minavg(inst).value == single_scenario_optimum(inst, 0));
  }
}

TEST_CASE("weights 3,2,1 on two machines") {
  const Instance inst = Instance::create(2, {3, 2, 1}, {{0, 1, 2}, {0, 2}});
  CHECK(solve_minavg(inst).value == 11);
}

TEST_CASE("all scenarios empty") {
  const Instance inst = Instance::create(2, {3, 2, 1}, {{}, {}});
  CHECK(solve_minavg(inst).value == 0);
}

TEST_CASE("exact against the reference") {
  ref::Lcg rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const ref::Raw raw = ref::random_raw(rng, 1 + trial % 8, 1 + trial % 3, 1 + trial % 3, 20);
    const Instance inst = raw.build();
    const auto r = solve_minavg(inst);
    CHECK(r.value == ref::optimum(raw, ObjectiveKind::MinAvgSum));
    CHECK(evaluate(inst, r.schedule, ObjectiveKind::MinAvgSum).aggregate == r.value);
  }
}

TEST_CASE("two scenarios reach the sum of the scenario optima") {
  ref::Lcg rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = ref::random_raw(rng, 10, 2 + trial % 2, 2, 9).build();
    Cost sum = 0;
    for (Cost c : scenario_optima(inst)) sum += c;
    CHECK(solve_minavg(inst).value == sum);
  }
}

TEST_CASE("per-job contributions reproduce the value") {
  ref::Lcg rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = ref::random_raw(rng, 9, 3, 3, 9).build();
    const auto r = solve_minavg(inst);
    std::vector<std::vector<Cost>> x(inst.machines(), std::vector<Cost>(inst.scenario_count(), 0));
    Cost total = 0;
    for (int j = 0; j < inst.job_count(); ++j) {
      for (int k : inst.scenarios_of(j)) total += inst.weight(j) * (1 + x[r.schedule.assignment[j]][k]++);
    }
    CHECK(total == r.value);
  }
}

TEST_CASE("state guard") {
  DpOptions tiny;
  tiny.max_states = 2;
  CHECK_THROWS_AS(solve_minavg(Instance::create(3, {5, 4, 3, 2}, {{0, 1, 2, 3}, {1, 3}}), tiny), GuardError);
}
