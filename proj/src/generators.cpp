#include "scensched/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "scensched/error.hpp"

namespace scensched {

void validate(const Graph& g) {
  if (g.vertices < 1) throw ContractError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw ContractError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ContractError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
}

Instance gen_coloring(const Graph& g, int machines) {
  validate(g);
  std::vector<std::vector<int>> scenarios;
  for (auto [u, v] : g.edges) scenarios.push_back({u, v});
  if (scenarios.empty()) scenarios.emplace_back();
  return Instance::create(machines, std::vector<Weight>(g.vertices, 1), scenarios);
}

Instance gen_maxcut(const Graph& g) { return gen_coloring(g, 2); }

std::vector<Cost> partition3_block_weights(const std::vector<Weight>& a, int machines) {
  if (a.empty()) throw ContractError("partition3 needs at least one number");
  if (machines < 2) throw ContractError("partition3 needs m >= 2");
  for (Weight x : a) {
    if (x < 1) throw ContractError("partition3 numbers must be positive");
  }
  const Cost n = static_cast<Cost>(a.size());
  const Cost base = 4 * static_cast<Cost>(machines) * n * *std::max_element(a.begin(), a.end());
  std::vector<Cost> q(a.size(), 1);
  for (int j = static_cast<int>(a.size()) - 2; j >= 0; --j) {
    auto next = checked_mul(q[j + 1], base);
    if (!next || *next > std::numeric_limits<Weight>::max()) {
      throw GuardError("partition3 block weights exceed the 64-bit weight budget");
    }
    q[j] = *next;
  }
  return q;
}

Instance gen_partition3(const std::vector<Weight>& a, int machines) {
  const std::vector<Cost> q = partition3_block_weights(a, machines);
  static const int kPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<Weight> weights;
  std::vector<std::vector<int>> scenarios(3);
  auto add_job = [&](Cost weight, std::initializer_list<int> in) {
    if (weight > std::numeric_limits<Weight>::max()) {
      throw GuardError("partition3 job weight exceeds the 64-bit weight budget");
    }
    for (int k : in) scenarios[k].push_back(static_cast<int>(weights.size()));
    weights.push_back(static_cast<Weight>(weight));
  };
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (const auto& p : kPairs) add_job(q[j], {p[0], p[1]});
    for (const auto& p : kPairs) add_job(q[j] + a[j], {p[0], p[1]});
    for (int g = 0; g < 2 * (machines - 2); ++g) add_job(q[j], {0, 1, 2});
  }
  return Instance::create(machines, std::move(weights), scenarios);
}

Rational partition3_tight_bound(const std::vector<Weight>& a, int machines) {
  const std::vector<Cost> q = partition3_block_weights(a, machines);
  Rational bound(0);
  Cost total = 0;
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    const Cost j = static_cast<Cost>(idx) + 1;
    bound += Rational((8 * j - 2) * q[idx] + (4 * j - 2) * a[idx]);
    bound += Rational(static_cast<Cost>(machines - 2) * (4 * j - 1) * q[idx]);
    total += a[idx];
  }
  return bound + Rational(total, 3);
}

ScenarioMatrix make_matrix(std::vector<std::vector<int>> rows) {
  ScenarioMatrix out;
  out.columns = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<int> sums(out.columns, 0);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != out.columns) throw ContractError("matrix rows differ in length");
    for (int c = 0; c < out.columns; ++c) {
      if (row[c] != 0 && row[c] != 1) throw ContractError("matrix entries must be 0 or 1");
      sums[c] += row[c];
    }
  }
  if (!sums.empty() && std::all_of(sums.begin(), sums.end(), [&](int s) { return s == sums.front(); })) {
    out.column_sum = sums.front();
  }
  out.rows = std::move(rows);
  return out;
}

namespace {

// One copy of the q-row block (J_{q,left} H).
void append_ones_h(std::vector<std::vector<int>>& rows, int left, int q) {
  for (int r = 0; r < q; ++r) {
    std::vector<int> row(left + q, 1);
    row[left + r] = 0;
    rows.push_back(std::move(row));
  }
}

}  // namespace

ScenarioMatrix gen_unsplittable(int q, int t, int max_rows) {
  if (q < 2 || t < 2) throw ContractError("unsplittable matrix needs q >= 2 and t >= 2");
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < q; ++r) {
    std::vector<int> row(2 * q, 1);
    std::fill(row.begin(), row.begin() + q, 0);
    row[r] = 1;
    rows.push_back(std::move(row));
  }
  for (int copy = 0; copy < q - 1; ++copy) append_ones_h(rows, q, q);
  ScenarioMatrix a = make_matrix(std::move(rows));

  for (int level = 3; level <= t; ++level) {
    const int prev_rows = static_cast<int>(a.rows.size());
    const int prev_sum = *a.column_sum;
    const int left = a.columns;
    const long long next_rows = prev_rows + static_cast<long long>(prev_sum) * q;
    if (next_rows > max_rows) {
      throw GuardError("A_q^t would have " + std::to_string(next_rows) + " rows (budget " +
                       std::to_string(max_rows) + ")");
    }
    std::vector<std::vector<int>> next;
    next.reserve(next_rows);
    for (const auto& row : a.rows) {
      std::vector<int> out(left + q, 1);
      for (int c = 0; c < left; ++c) out[c] = 1 - row[c];
      next.push_back(std::move(out));
    }
    // Left columns hold prev_rows - prev_sum ones, right ones prev_rows; each
    // copy adds q on the left and q-1 on the right.
    for (int copy = 0; copy < prev_sum; ++copy) append_ones_h(next, left, q);
    a = make_matrix(std::move(next));
    if (!a.column_sum) throw std::logic_error("A_q^t construction left unbalanced columns");
  }
  if (!a.column_sum) throw std::logic_error("A_q^t construction left unbalanced columns");
  return a;
}

bool is_unsplittable(const ScenarioMatrix& a, int max_rows) {
  if (!a.column_sum) throw ContractError("unsplittability is defined for uniform column sums");
  const int rows = static_cast<int>(a.rows.size());
  if (rows > max_rows) {
    throw GuardError("row-subset enumeration guard: " + std::to_string(rows) + " rows > " +
                     std::to_string(max_rows));
  }
  // Gray-code walk: each step toggles one row.
  std::vector<int> sums(a.columns, 0);
  std::vector<bool> in(rows, false);
  const std::uint64_t total = std::uint64_t{1} << rows;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int r = std::countr_zero(step);
    const int delta = in[r] ? -1 : 1;
    in[r] = !in[r];
    for (int c = 0; c < a.columns; ++c) sums[c] += delta * a.rows[r][c];
    const std::uint64_t gray = step ^ (step >> 1);
    if (gray == total - 1) continue;  // the full matrix is not proper
    if (std::all_of(sums.begin(), sums.end(), [&](int s) { return s == sums.front(); })) return false;
  }
  return true;
}

Instance matrix_to_instance(const ScenarioMatrix& a, Weight denominator) {
  if (!a.column_sum) throw ContractError("matrix columns must share one sum");
  if (denominator < 2) throw ContractError("denominator must be at least 2");
  if (a.columns < 1) throw ContractError("matrix needs at least one column");
  std::vector<Weight> weights;
  std::vector<std::vector<int>> scenarios(a.columns);
  for (const auto& row : a.rows) {
    for (int c = 0; c < a.columns; ++c) {
      if (row[c]) scenarios[c].push_back(static_cast<int>(weights.size()));
    }
    weights.push_back(denominator);
  }
  for (int extra = 0; extra < *a.column_sum; ++extra) {
    for (auto& s : scenarios) s.push_back(static_cast<int>(weights.size()));
    weights.push_back(denominator - 1);
  }
  return Instance::create(2, std::move(weights), scenarios);
}

Instance gen_random(int n, int machines, int scenarios, Weight w_max, const Rational& density,
                    std::uint64_t seed) {
  if (n < 1 || machines < 1 || scenarios < 1) throw ContractError("n, m and K must be positive");
  if (w_max < 1) throw ContractError("w_max must be at least 1");
  if (density <= Rational(0) || density > Rational(1)) throw ContractError("density must lie in (0,1]");
  std::mt19937_64 rng(seed);
  const auto num = static_cast<std::uint64_t>(density.numerator());
  const auto den = static_cast<std::uint64_t>(density.denominator());
  std::vector<Weight> weights(n);
  std::vector<std::vector<int>> members(scenarios);
  for (int j = 0; j < n; ++j) {
    weights[j] = 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(w_max));
    for (int k = 0; k < scenarios; ++k) {
      if (rng() % den < num) members[k].push_back(j);
    }
  }
  return Instance::create(machines, std::move(weights), members);
}

}  // namespace scensched
