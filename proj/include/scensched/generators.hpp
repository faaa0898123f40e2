#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scensched/model.hpp"
#include "scensched/rational.hpp"

namespace scensched {

/// Simple undirected graph on vertices 0..vertices-1.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Throws ContractError on self-loops, repeated edges or out-of-range ends.
void validate(const Graph& g);

/// Unit jobs per vertex, one two-job scenario per edge. A graph without
/// edges gets a single empty scenario so the instance stays well formed.
Instance gen_coloring(const Graph& g, int machines);

/// Same instance map as coloring, on two machines.
Instance gen_maxcut(const Graph& g);

/// Block weights Q_j = (4 m n a_max)^(n-j), j = 1..n.
std::vector<Cost> partition3_block_weights(const std::vector<Weight>& a, int machines);

/// Blocks of 2m+2 jobs over 3 scenarios: white jobs of weight Q_j and black
/// jobs of weight Q_j + a_j with profiles {1,2}, {2,3}, {1,3}, plus 2(m-2)
/// gray jobs of weight Q_j in all scenarios. Input job order is block by
/// block: white, black, gray.
Instance gen_partition3(const std::vector<Weight>& a, int machines);

/// Lower bound on the MinMax optimum of gen_partition3(a, m), met exactly
/// when a splits into three parts of equal sum:
/// sum_j ((8j-2) Q_j + (4j-2) a_j) + (sum a) / 3, plus (m-2) sum_j (4j-1) Q_j
/// contributed by the gray machines when m > 2.
Rational partition3_tight_bound(const std::vector<Weight>& a, int machines);

/// 0/1 matrix, rows are jobs and columns are scenarios.
struct ScenarioMatrix {
  std::vector<std::vector<int>> rows;
  int columns = 0;
  /// Common column sum when all columns agree.
  std::optional<int> column_sum;
};

ScenarioMatrix make_matrix(std::vector<std::vector<int>> rows);

/// A_q^t. Level 2 is (I J; J H; ...; J H) with q-1 copies of (J H). Level t
/// puts J - A_q^(t-1) next to an all-ones block and appends copies of
/// (J H) until the columns balance, which takes exactly c_(t-1) copies
/// (the previous column sum).
ScenarioMatrix gen_unsplittable(int q, int t, int max_rows = 1'000'000);

/// True iff no nonempty proper row subset has uniform column sums.
/// Throws ContractError if A itself is not uniform, GuardError above max_rows.
bool is_unsplittable(const ScenarioMatrix& a, int max_rows = 20);

/// Two machines; one weight-D job per row, plus c jobs of weight D-1 in every
/// scenario (the 1 - 1/D jobs scaled by D).
Instance matrix_to_instance(const ScenarioMatrix& a, Weight denominator = 100);

/// Weights uniform in [1, w_max], memberships independent with probability
/// `density`. Draws come straight from mt19937_64 so instances are identical
/// on every platform.
Instance gen_random(int n, int machines, int scenarios, Weight w_max, const Rational& density,
                    std::uint64_t seed);

}  // namespace scensched
