#include <doctest.h>

#include "scensched/error.hpp"
#include "scensched/generators.hpp"
#include "scensched/oracle.hpp"
#include "support/reference.hpp"

using namespace scensched;

TEST_CASE("five unit jobs on two machines") {
  const Instance inst = Instance::create(2, std::vector<Weight>(5, 1), {{0, 1, 2, 3, 4}});
  CHECK(brute_force(inst, ObjectiveKind::MinMax).best_value == 9);
}

TEST_CASE("one machine has a single schedule") {
  const Instance inst = Instance::create(1, {4, 2, 7}, {{0, 1}, {1, 2}});
  const auto r = brute_force(inst, ObjectiveKind::MinMax);
  CHECK(r.best_value == evaluate(inst, Schedule{{0, 0, 0}}, ObjectiveKind::MinMax).aggregate);
  CHECK(r.optima_count == 1);
}

TEST_CASE("triangle needs three colors") {
  Graph g{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(brute_force(gen_coloring(g, 2), ObjectiveKind::MinMax).best_value == 3);
}

TEST_CASE("uniform expectation of two unit jobs") {
  const Instance inst = Instance::create(2, {1, 1}, {{0, 1}});
  const auto e = expected_uniform_cost(inst);
  CHECK(e.total == Rational(5, 2));
  CHECK(e.total / Rational(2) == Rational(5, 4));
}

TEST_CASE("single job expectation is its weight") {
  const Instance inst = Instance::create(3, {6}, {{0}});
  CHECK(expected_uniform_cost(inst).total == Rational(6));
}

TEST_CASE("expectation equals the enumeration average") {
  ref::Lcg rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const ref::Raw raw = ref::random_raw(rng, 2 + trial % 5, 2 + trial % 2, 1 + trial % 3, 6);
    Cost total = 0, count = 0;
    ref::for_each_assignment(raw, [&](const std::vector<int>& a) {
      for (Cost c : ref::costs(raw, a)) total += c;
      ++count;
    });
    CHECK(expected_uniform_cost(raw.build()).total == Rational(total, count));
  }
}

TEST_CASE("brute force agrees with the reference over all objectives") {
  ref::Lcg rng(23);
  const ObjectiveKind kinds[] = {ObjectiveKind::MinMax, ObjectiveKind::MinAvgSum, ObjectiveKind::RegretMax,
                                 ObjectiveKind::RegretSum};
  for (int trial = 0; trial < 30; ++trial) {
    const ref::Raw raw = ref::random_raw(rng, 3 + trial % 4, 2 + trial % 2, 1 + trial % 3, 5);
    const Instance inst = raw.build();
    for (auto kind : kinds) {
      const auto r = brute_force(inst, kind);
      CHECK(r.best_value == ref::optimum(raw, kind));
      CHECK(evaluate(inst, r.best_schedule, kind).aggregate == r.best_value);
    }
    for (int k = 0; k < inst.scenario_count(); ++k) {
      CHECK(brute_force(inst, ObjectiveKind::MinMax).best_value >= single_scenario_optimum(inst, k));
    }
  }
}

TEST_CASE("canonical enumeration size is a sum of Stirling numbers") {
  CHECK(canonical_schedule_count(3, 2) == 4);
  CHECK(canonical_schedule_count(4, 3) == 14);
  CHECK(canonical_schedule_count(5, 5) == 52);
  for (int n = 1; n <= 7; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const Instance inst = Instance::create(m, std::vector<Weight>(n, 1), {{0}});
      std::int64_t visits = 0;
      for_each_canonical_schedule(inst, [&](const Schedule&, std::span<const Cost>) { ++visits; });
      CHECK(visits == canonical_schedule_count(n, m));
    }
  }
}

TEST_CASE("single scenario optimum is the enumeration minimum") {
  ref::Lcg rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const ref::Raw raw = ref::random_raw(rng, 6, 2 + trial % 3, 1, 8);
    CHECK(brute_force(raw.build(), ObjectiveKind::MinMax).best_value == ref::single_optimum(raw, 0));
  }
}

TEST_CASE("regret sum and minavg share their optimal sets") {
  ref::Lcg rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = ref::random_raw(rng, 6, 2, 3, 5).build();
    CHECK(all_optimal_schedules(inst, ObjectiveKind::MinAvgSum) ==
          all_optimal_schedules(inst, ObjectiveKind::RegretSum));
  }
}

TEST_CASE("enumeration guard") {
  const Instance inst = Instance::create(4, std::vector<Weight>(20, 1), {{0}});
  CHECK_THROWS_AS(brute_force(inst, ObjectiveKind::MinMax), GuardError);
}
