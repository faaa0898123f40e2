#pragma once

// Layered forward DP over states made of m machine rows, with machine
// symmetry removed by sorting the rows. Shared by the MinMax (Y,Z) and the
// MinAvg (X) dynamic programs.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "scensched/error.hpp"
#include "scensched/integer.hpp"
#include "scensched/model.hpp"

namespace scensched::detail {

struct CellsHash {
  std::size_t operator()(const std::vector<Cost>& cells) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    CostHash hash;
    for (Cost c : cells) h = (h ^ hash(c)) * 1099511628211ULL;
    return h;
  }
};

struct RowDpLink {
  int pred = -1;
  int row = 0;  // row of the predecessor's canonical state that took the job
};

/// Lexicographic stable sort of the rows; returns order[new] = old.
inline std::vector<int> canonical_order(std::span<const Cost> cells, int rows, int width) {
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::lexicographical_compare(cells.begin() + a * width, cells.begin() + (a + 1) * width,
                                        cells.begin() + b * width, cells.begin() + (b + 1) * width);
  });
  return order;
}

inline std::vector<Cost> permute_rows(std::span<const Cost> cells, std::span<const int> order,
                                      int width) {
  std::vector<Cost> out(cells.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    std::copy_n(cells.begin() + order[r] * width, width, out.begin() + r * width);
  }
  return out;
}

/// Result of the forward pass: the final layer's states plus one link table
/// per stage for reconstruction.
struct RowDpResult {
  int rows = 0;
  int width = 0;
  std::vector<std::vector<Cost>> final_states;
  std::vector<Cost> final_values;
  std::vector<std::vector<RowDpLink>> links;  // links[j][state] for stage j+1
  std::size_t peak_states = 0;
};

/// `step(job, row)` mutates one machine row for placing `job` there and
/// returns the cost increment. With `minimize_value` the state keeps its
/// cheapest predecessor (ties: first found); otherwise the first predecessor
/// that reaches the state is kept.
template <typename Step>
RowDpResult run_row_dp(const Instance& inst, int width, Step&& step, bool minimize_value,
                       std::size_t max_states) {
  const int m = inst.machines();
  const int n = inst.job_count();
  RowDpResult result;
  result.rows = m;
  result.width = width;

  std::vector<std::vector<Cost>> states{std::vector<Cost>(static_cast<std::size_t>(m) * width, 0)};
  std::vector<Cost> values{0};
  result.links.reserve(n);

  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<Cost>> next_states;
    std::vector<Cost> next_values;
    std::vector<RowDpLink> next_links;
    std::unordered_map<std::vector<Cost>, int, CellsHash> index;
    const bool inert = inst.scenarios_of(j).empty();

    for (std::size_t s = 0; s < states.size(); ++s) {
      const auto& cells = states[s];
      for (int r = 0; r < m; ++r) {
        if (inert && r > 0) break;
        // Identical rows lead to identical successors.
        if (r > 0 && std::equal(cells.begin() + (r - 1) * width, cells.begin() + r * width,
                                cells.begin() + r * width)) {
          continue;
        }
        std::vector<Cost> updated = cells;
        const Cost increment = step(j, std::span<Cost>(updated.data() + r * width, width));
        const Cost value = values[s] + increment;
        auto order = canonical_order(updated, m, width);
        auto canonical = permute_rows(updated, order, width);

        auto [it, inserted] = index.try_emplace(std::move(canonical), static_cast<int>(next_states.size()));
        if (inserted) {
          next_states.push_back(it->first);
          next_values.push_back(value);
          next_links.push_back({static_cast<int>(s), r});
          if (next_states.size() > max_states) {
            throw GuardError("DP state guard exceeded at stage " + std::to_string(j + 1) + ": more than " +
                             std::to_string(max_states) + " states");
          }
        } else if (minimize_value && value < next_values[it->second]) {
          next_values[it->second] = value;
          next_links[it->second] = {static_cast<int>(s), r};
        }
      }
    }
    result.peak_states = std::max(result.peak_states, next_states.size());
    states = std::move(next_states);
    values = std::move(next_values);
    result.links.push_back(std::move(next_links));
  }
  result.final_states = std::move(states);
  result.final_values = std::move(values);
  return result;
}

/// Replays the predecessor chain of `final_state` from the all-zero state,
/// tracking which physical machine each canonical row belongs to. Checks that
/// the replay lands exactly on the stored final state.
template <typename Step>
Schedule replay_row_dp(const Instance& inst, const RowDpResult& dp, int final_state, Step&& step) {
  const int n = inst.job_count();
  const int m = dp.rows;
  const int width = dp.width;

  std::vector<int> chosen_rows(n);
  int state = final_state;
  for (int j = n - 1; j >= 0; --j) {
    const RowDpLink& link = dp.links[j][state];
    chosen_rows[j] = link.row;
    state = link.pred;
  }

  Schedule sched;
  sched.assignment.resize(n);
  std::vector<Cost> cells(static_cast<std::size_t>(m) * width, 0);
  std::vector<int> machine_of_row(m);
  std::iota(machine_of_row.begin(), machine_of_row.end(), 0);
  for (int j = 0; j < n; ++j) {
    const int r = chosen_rows[j];
    sched.assignment[j] = machine_of_row[r];
    step(j, std::span<Cost>(cells.data() + r * width, width));
    auto order = canonical_order(cells, m, width);
    cells = permute_rows(cells, order, width);
    std::vector<int> relabelled(m);
    for (int i = 0; i < m; ++i) relabelled[i] = machine_of_row[order[i]];
    machine_of_row = std::move(relabelled);
  }
  if (cells != dp.final_states[final_state]) {
    throw std::logic_error("DP replay does not reproduce the stored final state");
  }
  return sched;
}

}  // namespace scensched::detail
