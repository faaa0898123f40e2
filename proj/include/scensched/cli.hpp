#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scensched/dp_config.hpp"
#include "scensched/dp_minmax.hpp"
#include "scensched/model.hpp"
#include "scensched/oracle.hpp"
#include "scensched/rational.hpp"

namespace scensched {

struct AlgoParams {
  Rational epsilon{1, 2};
  DpOptions dp;
  ConfigDpOptions config;
  OracleOptions oracle;
};

struct AlgoRun {
  Schedule schedule;
  CostVector cost;
};

/// Algorithms: oracle, two-scenario, dp, config, fptas, approx-minmax2,
/// approx-minavg. Throws ContractError naming the violated constraint when
/// the algorithm cannot serve the objective or instance.
AlgoRun run_algorithm(const Instance& inst, std::string_view algo, ObjectiveKind kind,
                      const AlgoParams& params = {});

/// Certified worst-case ratio of an algorithm for an objective; 1 for exact
/// algorithms. Empty when no guarantee exists.
std::optional<Rational> certified_ratio(const Instance& inst, std::string_view algo,
                                        ObjectiveKind kind, const AlgoParams& params = {});

/// Exit codes: 0 success, 1 verification failure, 2 contract or usage error,
/// 3 resource guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scensched
