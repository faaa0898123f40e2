#include <doctest.h>

#include "scensched/error.hpp"
#include "scensched/two_scenario.hpp"
#include "support/reference.hpp"

using namespace scensched;

namespace {

void check_ideal(const Instance& inst) {
  const Schedule s = solve_two_scenarios(inst);
  validate(inst, s);
  CHECK(scenario_costs(inst, s) == scenario_optima(inst));
}

}  // namespace

TEST_CASE("overlapping pair of unit scenarios") {
  const Instance inst = Instance::create(2, {1, 1, 1}, {{0, 1}, {1, 2}});
  const Schedule s = solve_two_scenarios(inst);
  CHECK(scenario_costs(inst, s) == std::vector<Cost>{2, 2});
}

TEST_CASE("identical scenarios give round-robin") {
  ref::Lcg rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    ref::Raw raw = ref::random_raw(rng, 9, 2 + trial % 3, 1, 9, 100);
    raw.scenarios.push_back(raw.scenarios[0]);
    check_ideal(raw.build());
  }
}

TEST_CASE("disjoint scenarios") {
  ref::Lcg rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    ref::Raw raw = ref::random_raw(rng, 8, 2 + trial % 3, 1, 9, 100);
    raw.scenarios = {{}, {}};
    for (int j = 0; j < 8; ++j) {
      const int pick = rng.below(3);
      if (pick < 2) raw.scenarios[pick].push_back(j);
    }
    const Instance inst = raw.build();
    const Schedule s = solve_two_scenarios(inst);
    const auto costs = ref::costs(raw, to_input_order(inst, s));
    CHECK(costs[0] == ref::single_optimum(raw, 0));
    CHECK(costs[1] == ref::single_optimum(raw, 1));
  }
}

TEST_CASE("ideal on random instances against the reference") {
  ref::Lcg rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const ref::Raw raw = ref::random_raw(rng, 1 + trial % 10, 1 + trial % 4, 2, 9, 30 + trial % 60);
    const Instance inst = raw.build();
    TwoScenarioStats stats;
    const Schedule s = solve_two_scenarios(inst, &stats);
    const auto costs = ref::costs(raw, to_input_order(inst, s));
    CHECK(costs[0] == ref::single_optimum(raw, 0));
    CHECK(costs[1] == ref::single_optimum(raw, 1));
  }
}

TEST_CASE("larger instances stay ideal") {
  ref::Lcg rng(10);
  for (int trial = 0; trial < 20; ++trial) check_ideal(ref::random_raw(rng, 200, 2 + trial % 7, 2, 50).build());
}

TEST_CASE("wrong scenario count is a contract error") {
  const Instance inst = Instance::create(2, {1, 1}, {{0}, {1}, {0, 1}});
  CHECK_THROWS_WITH_AS(solve_two_scenarios(inst), doctest::Contains("requires K=2"), ContractError);
}
