#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scensched/model.hpp"
#include "scensched/rational.hpp"

namespace scensched {

/// sigma: profiles ordered lexicographically by characteristic vector, with
/// scenario 0 as the most significant position. The empty profile is 0.
int profile_index(std::uint64_t mask, int scenarios);
std::uint64_t profile_of_index(int index, int scenarios);

/// Profile counts on the two machines of a pair, indexed by sigma.
struct LatticePoint {
  std::vector<int> x;
  std::vector<int> y;

  auto operator<=>(const LatticePoint&) const = default;
  int l1() const;
  int linf() const;
};

LatticePoint zero_point(int scenarios);
LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
/// Componentwise a <= b.
bool dominated_by(const LatticePoint& a, const LatticePoint& b);
/// Nonnegative with Mx = My.
bool in_cone(const LatticePoint& p, int scenarios);

struct HilbertOptions {
  int max_scenarios = 3;
};

/// 2^(2^(K+1)) (K!)^2, the a priori cap on basis entries.
Cost hilbert_entry_bound(int scenarios);

/// Minimal nonzero lattice points of {(x,y) >= 0 : Mx = My}, computed by the
/// Contejean-Devie completion procedure. Sorted by l1 norm, then
/// lexicographically. Cached per K.
const std::vector<LatticePoint>& hilbert_basis(int scenarios, const HilbertOptions& options = {});

/// Multiplicities lambda (aligned with `basis`) with sum lambda_b b = p.
/// Largest elements are taken first, each as often as it fits; any basis
/// element below a cone point leaves a cone point, so this never gets stuck
/// on a complete basis. Throws ContractError if p is not in the cone.
std::vector<int> decompose(const LatticePoint& p, const std::vector<LatticePoint>& basis,
                           int scenarios);

/// Counts of each profile on machines i1 and i2.
LatticePoint pair_point(const Instance& inst, const Schedule& sched, int first, int second);

/// Regroups the jobs on the two machines by profile and alternates each
/// profile class between them in canonical order, starting with `first`.
Schedule profile_round_robin(const Instance& inst, const Schedule& sched, int first, int second);

/// floor(sqrt(K) * 2^(K-1)): the final-disbalance cap for optimal unit-weight
/// schedules.
int lemma_final_bound(int scenarios);

struct EqualizeTwoResult {
  Schedule schedule;
  DisbalanceReport before;
  /// Pairwise disbalance of the extended instance (auxiliary jobs kept).
  DisbalanceReport extended;
  DisbalanceReport after;
  std::vector<int> aux_per_scenario;
  std::vector<int> multiplicities;
  /// sum of ||b||_1 over used basis elements plus max_k d_k.
  int certified_bound = 0;
};

/// Two-machine equalizer for an optimal unit-weight schedule. Auxiliary
/// singleton jobs are appended after all real jobs to zero the final
/// disbalance, the pair's profile-count vector is split into basis classes,
/// and jobs are dealt into the lowest-indexed class copy that still has room,
/// scanning basis elements in order. Auxiliary jobs are dropped at the end.
EqualizeTwoResult equalize_two(const Instance& inst, const Schedule& sched, int first, int second);

enum class ThresholdMode { Auto, ClosedForm, Measured, Custom };

struct EqualizeAllOptions {
  ThresholdMode mode = ThresholdMode::Auto;
  Cost custom_f = 0;
  int max_iterations = 10'000;
};

/// Closed-form two-machine full-disbalance bound, with the sqrt term floored.
/// Empty when it overflows (K >= 3).
std::optional<Cost> closed_form_f(int scenarios);
/// Sum of ||b||_1 over the basis plus the floored final-disbalance cap.
Cost measured_f(int scenarios);

struct EqualizeAllResult {
  Schedule schedule;
  Cost f = 0;
  int iterations = 0;
  int pair_calls = 0;
  /// m * potential after each iteration (index 0 is the input).
  std::vector<Cost> scaled_potentials;
  DisbalanceReport before;
  DisbalanceReport after;
};

/// m = 2: one equalize_two call. m > 2: while some machine's count in some
/// scenario is more than 2K f away from the average, equalize it with the
/// lightest (if above) or heaviest (if below) machine in that scenario. The
/// potential sum_i sum_k |count_ik - L_k| must strictly drop each round
/// (std::logic_error otherwise); GuardError at the iteration cap.
EqualizeAllResult equalize_all(const Instance& inst, const Schedule& sched,
                               const EqualizeAllOptions& options = {});

struct ProbeOptions {
  int n = 8;
  int machines = 2;
  int scenarios = 2;
  int trials = 100;
  std::uint64_t seed = 0;
  Weight w_max = 1;
  Rational density{1, 2};
  double max_log2_size = 32;
};

struct ProbeTrial {
  std::uint64_t seed = 0;
  std::vector<Weight> weights;
  std::vector<std::vector<int>> scenarios;
  /// Minimum full disbalance over all MinAvgSum-optimal schedules.
  int min_full_disbalance = 0;
  /// Largest final disbalance among the optimal schedules.
  int max_final_disbalance = 0;
  std::size_t optimal_count = 0;
};

struct ProbeReport {
  int max_observed = 0;
  int lemma_bound = 0;
  std::vector<ProbeTrial> trials;
  /// Indices into `trials` achieving max_observed.
  std::vector<int> maximizers;
};

/// For each seeded instance, the best full disbalance any optimal schedule
/// achieves, found by full enumeration.
ProbeReport conjecture_probe(const ProbeOptions& options);

}  // namespace scensched
