#include "scensched/balance.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "scensched/error.hpp"
#include "scensched/generators.hpp"
#include "scensched/oracle.hpp"

namespace scensched {

int profile_index(std::uint64_t mask, int scenarios) {
  int index = 0;
  for (int k = 0; k < scenarios; ++k) {
    if (mask >> k & 1U) index |= 1 << (scenarios - 1 - k);
  }
  return index;
}

std::uint64_t profile_of_index(int index, int scenarios) {
  std::uint64_t mask = 0;
  for (int k = 0; k < scenarios; ++k) {
    if (index >> (scenarios - 1 - k) & 1) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

int LatticePoint::l1() const {
  return std::accumulate(x.begin(), x.end(), 0) + std::accumulate(y.begin(), y.end(), 0);
}

int LatticePoint::linf() const {
  int best = 0;
  for (int v : x) best = std::max(best, v);
  for (int v : y) best = std::max(best, v);
  return best;
}

LatticePoint zero_point(int scenarios) {
  const int profiles = 1 << scenarios;
  return LatticePoint{std::vector<int>(profiles, 0), std::vector<int>(profiles, 0)};
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out = a;
  for (std::size_t s = 0; s < out.x.size(); ++s) {
    out.x[s] += b.x[s];
    out.y[s] += b.y[s];
  }
  return out;
}

bool dominated_by(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t s = 0; s < a.x.size(); ++s) {
    if (a.x[s] > b.x[s] || a.y[s] > b.y[s]) return false;
  }
  return true;
}

bool in_cone(const LatticePoint& p, int scenarios) {
  const int profiles = 1 << scenarios;
  if (static_cast<int>(p.x.size()) != profiles || static_cast<int>(p.y.size()) != profiles) return false;
  std::vector<long long> diff(scenarios, 0);
  for (int s = 0; s < profiles; ++s) {
    if (p.x[s] < 0 || p.y[s] < 0) return false;
    const std::uint64_t mask = profile_of_index(s, scenarios);
    for (int k = 0; k < scenarios; ++k) {
      if (mask >> k & 1U) diff[k] += p.x[s] - p.y[s];
    }
  }
  return std::all_of(diff.begin(), diff.end(), [](long long d) { return d == 0; });
}

Cost hilbert_entry_bound(int scenarios) {
  Cost factorial = 1;
  for (int i = 2; i <= scenarios; ++i) factorial *= i;
  const int exponent = 1 << (scenarios + 1);
  if (exponent > 100) throw GuardError("Hilbert entry bound overflows");
  return (Cost{1} << exponent) * factorial * factorial;
}

namespace {

using Flat = std::vector<int>;

LatticePoint unflatten(const Flat& v, int profiles) {
  return LatticePoint{Flat(v.begin(), v.begin() + profiles), Flat(v.begin() + profiles, v.end())};
}

bool flat_dominated(const Flat& a, const Flat& b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] > b[c]) return false;
  }
  return true;
}

std::vector<LatticePoint> compute_basis(int scenarios) {
  const int profiles = 1 << scenarios;
  const int width = 2 * profiles;
  // Column c of [M, -M].
  std::vector<std::vector<int>> column(width, std::vector<int>(scenarios, 0));
  for (int s = 0; s < profiles; ++s) {
    const std::uint64_t mask = profile_of_index(s, scenarios);
    for (int k = 0; k < scenarios; ++k) {
      if (mask >> k & 1U) {
        column[s][k] = 1;
        column[profiles + s][k] = -1;
      }
    }
  }

  std::vector<Flat> minimal;
  std::set<Flat> frontier;
  for (int c = 0; c < width; ++c) {
    Flat e(width, 0);
    e[c] = 1;
    frontier.insert(std::move(e));
  }
  std::vector<int> image(scenarios);
  while (!frontier.empty()) {
    std::vector<const Flat*> open;
    for (const Flat& t : frontier) {
      std::fill(image.begin(), image.end(), 0);
      for (int c = 0; c < width; ++c) {
        if (t[c] == 0) continue;
        for (int k = 0; k < scenarios; ++k) image[k] += t[c] * column[c][k];
      }
      if (std::all_of(image.begin(), image.end(), [](int v) { return v == 0; })) {
        minimal.push_back(t);
      } else {
        open.push_back(&t);
      }
    }
    std::set<Flat> next;
    for (const Flat* t : open) {
      std::fill(image.begin(), image.end(), 0);
      for (int c = 0; c < width; ++c) {
        if ((*t)[c] == 0) continue;
        for (int k = 0; k < scenarios; ++k) image[k] += (*t)[c] * column[c][k];
      }
      for (int c = 0; c < width; ++c) {
        int dot = 0;
        for (int k = 0; k < scenarios; ++k) dot += image[k] * column[c][k];
        if (dot >= 0) continue;
        Flat child = *t;
        ++child[c];
        bool reducible = false;
        for (const Flat& b : minimal) {
          if (flat_dominated(b, child)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.insert(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  std::vector<LatticePoint> basis;
  basis.reserve(minimal.size());
  for (const Flat& v : minimal) basis.push_back(unflatten(v, profiles));
  std::sort(basis.begin(), basis.end(), [](const LatticePoint& a, const LatticePoint& b) {
    if (a.l1() != b.l1()) return a.l1() < b.l1();
    return a < b;
  });
  const Cost bound = hilbert_entry_bound(scenarios);
  for (const auto& b : basis) {
    if (b.linf() > bound || !in_cone(b, scenarios)) {
      throw std::logic_error("Hilbert basis element violates the cone or the entry bound");
    }
  }
  return basis;
}

}  // namespace

const std::vector<LatticePoint>& hilbert_basis(int scenarios, const HilbertOptions& options) {
  if (scenarios < 1) throw ContractError("Hilbert basis needs K >= 1");
  if (scenarios > options.max_scenarios) {
    throw GuardError("Hilbert basis guard: K=" + std::to_string(scenarios) + " > " +
                     std::to_string(options.max_scenarios));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<LatticePoint>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(scenarios);
  if (it == cache.end()) it = cache.emplace(scenarios, compute_basis(scenarios)).first;
  return it->second;
}

std::vector<int> decompose(const LatticePoint& p, const std::vector<LatticePoint>& basis,
                           int scenarios) {
  if (!in_cone(p, scenarios)) throw ContractError("point is not a lattice point of the cone");
  LatticePoint rest = p;
  std::vector<int> lambda(basis.size(), 0);
  for (std::size_t idx = basis.size(); idx-- > 0;) {
    const LatticePoint& b = basis[idx];
    int times = std::numeric_limits<int>::max();
    for (std::size_t s = 0; s < b.x.size(); ++s) {
      if (b.x[s] > 0) times = std::min(times, rest.x[s] / b.x[s]);
      if (b.y[s] > 0) times = std::min(times, rest.y[s] / b.y[s]);
    }
    if (times == 0 || times == std::numeric_limits<int>::max()) continue;
    lambda[idx] = times;
    for (std::size_t s = 0; s < b.x.size(); ++s) {
      rest.x[s] -= times * b.x[s];
      rest.y[s] -= times * b.y[s];
    }
  }
  if (rest.l1() != 0) throw std::logic_error("decomposition stuck: basis is incomplete");
  return lambda;
}

namespace {

void check_pair(const Instance& inst, const Schedule& sched, int first, int second) {
  validate(inst, sched);
  if (first == second) throw ContractError("pair operations need two distinct machines");
  if (first < 0 || second < 0 || first >= inst.machines() || second >= inst.machines()) {
    throw ContractError("machine index out of range");
  }
}

void require_unit(const Instance& inst, const char* what) {
  if (!inst.unit_weights()) throw ContractError(std::string(what) + " requires unit weights");
}

}  // namespace

LatticePoint pair_point(const Instance& inst, const Schedule& sched, int first, int second) {
  check_pair(inst, sched, first, second);
  const int k_count = inst.scenario_count();
  LatticePoint p = zero_point(k_count);
  for (int j = 0; j < inst.job_count(); ++j) {
    const int s = profile_index(inst.profile_mask(j), k_count);
    if (sched.assignment[j] == first) ++p.x[s];
    if (sched.assignment[j] == second) ++p.y[s];
  }
  return p;
}

Schedule profile_round_robin(const Instance& inst, const Schedule& sched, int first, int second) {
  check_pair(inst, sched, first, second);
  require_unit(inst, "profile round-robin");
  std::map<std::uint64_t, int> seen;
  Schedule out = sched;
  for (int j = 0; j < inst.job_count(); ++j) {
    if (sched.assignment[j] != first && sched.assignment[j] != second) continue;
    int& count = seen[inst.profile_mask(j)];
    out.assignment[j] = count % 2 == 0 ? first : second;
    ++count;
  }
  return out;
}

int lemma_final_bound(int scenarios) {
  // Largest d with d^2 <= K * 4^(K-1).
  const Cost target = static_cast<Cost>(scenarios) << (2 * (scenarios - 1));
  Cost d = 0;
  while ((d + 1) * (d + 1) <= target) ++d;
  return static_cast<int>(d);
}

EqualizeTwoResult equalize_two(const Instance& inst, const Schedule& sched, int first, int second) {
  check_pair(inst, sched, first, second);
  require_unit(inst, "equalize");
  const int k_count = inst.scenario_count();
  const int profiles = 1 << k_count;
  const auto& basis = hilbert_basis(k_count);

  EqualizeTwoResult result;
  result.before = pairwise_disbalance(inst, sched, first, second);

  // Extended instance: auxiliary singleton jobs after all real jobs.
  std::vector<int> on_first(k_count, 0), on_second(k_count, 0);
  for (int j = 0; j < inst.job_count(); ++j) {
    for (int k : inst.scenarios_of(j)) {
      if (sched.assignment[j] == first) ++on_first[k];
      if (sched.assignment[j] == second) ++on_second[k];
    }
  }
  std::vector<std::vector<int>> scenarios = inst.canonical_scenarios();
  Schedule psi = sched;
  result.aux_per_scenario.assign(k_count, 0);
  int next_id = inst.job_count();
  for (int k = 0; k < k_count; ++k) {
    const int gap = on_first[k] - on_second[k];
    result.aux_per_scenario[k] = std::abs(gap);
    for (int a = 0; a < std::abs(gap); ++a) {
      scenarios[k].push_back(next_id++);
      psi.assignment.push_back(gap > 0 ? second : first);
    }
  }
  const Instance extended = Instance::create(inst.machines(), std::vector<Weight>(next_id, 1), scenarios);

  const LatticePoint v = pair_point(extended, psi, first, second);
  result.multiplicities = decompose(v, basis, k_count);

  // copies[p][l] is the unused part of the l-th copy of basis element p.
  std::vector<std::vector<std::vector<int>>> copies(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) {
    std::vector<int> flat(basis[p].x);
    flat.insert(flat.end(), basis[p].y.begin(), basis[p].y.end());
    copies[p].assign(result.multiplicities[p], flat);
  }

  Schedule psi_prime = psi;
  for (int j = 0; j < extended.job_count(); ++j) {
    if (psi.assignment[j] != first && psi.assignment[j] != second) continue;
    const int s = profile_index(extended.profile_mask(j), k_count);
    bool placed = false;
    for (std::size_t p = 0; p < copies.size() && !placed; ++p) {
      for (auto& copy : copies[p]) {
        if (copy[s] > 0) {
          --copy[s];
          psi_prime.assignment[j] = first;
          placed = true;
          break;
        }
        if (copy[profiles + s] > 0) {
          --copy[profiles + s];
          psi_prime.assignment[j] = second;
          placed = true;
          break;
        }
      }
    }
    if (!placed) throw std::logic_error("equalize: job fits no class copy");
    for (const auto& group : copies) {
      for (std::size_t l = 1; l < group.size(); ++l) {
        if (!flat_dominated(group[l - 1], group[l])) {
          throw std::logic_error("equalize: class copies lost their monotone order");
        }
      }
    }
  }
  for (const auto& group : copies) {
    for (const auto& copy : group) {
      if (std::any_of(copy.begin(), copy.end(), [](int c) { return c != 0; })) {
        throw std::logic_error("equalize: a class copy was not filled");
      }
    }
  }
  if (!in_cone(pair_point(extended, psi_prime, first, second), k_count)) {
    throw std::logic_error("equalize: extended schedule left the cone");
  }
  result.extended = pairwise_disbalance(extended, psi_prime, first, second);

  result.schedule.assignment.assign(psi_prime.assignment.begin(),
                                    psi_prime.assignment.begin() + inst.job_count());
  result.after = pairwise_disbalance(inst, result.schedule, first, second);
  if (unit_minavg_from_counts(inst, result.schedule) > unit_minavg_from_counts(inst, sched)) {
    throw std::logic_error("equalize increased the objective");
  }

  int bound = 0;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    if (result.multiplicities[p] > 0) bound += basis[p].l1();
  }
  bound += *std::max_element(result.aux_per_scenario.begin(), result.aux_per_scenario.end());
  result.certified_bound = bound;
  return result;
}

std::optional<Cost> closed_form_f(int scenarios) {
  if (scenarios < 1) throw ContractError("closed-form bound needs K >= 1");
  const int exponent = 1 << (scenarios + 1);
  if (exponent + scenarios + 1 >= 120) return std::nullopt;
  const Cost entry = hilbert_entry_bound(scenarios);
  std::optional<Cost> size = 1;
  for (int i = 0; i < 2 * (1 << scenarios) && size; ++i) size = checked_mul(*size, entry + 1);
  if (!size) return std::nullopt;
  Cost factorial = 1;
  for (int i = 2; i <= scenarios; ++i) factorial *= i;
  auto tail = checked_mul(Cost{1} << (exponent + scenarios + 1), factorial * factorial);
  if (!tail) return std::nullopt;
  auto product = checked_mul(*size, *tail);
  if (!product) return std::nullopt;
  return checked_add(*product, lemma_final_bound(scenarios));
}

Cost measured_f(int scenarios) {
  Cost total = lemma_final_bound(scenarios);
  for (const auto& b : hilbert_basis(scenarios)) total += b.l1();
  return total;
}

namespace {

std::vector<std::vector<int>> machine_counts(const Instance& inst, const Schedule& sched) {
  std::vector<std::vector<int>> counts(inst.machines(), std::vector<int>(inst.scenario_count(), 0));
  for (int j = 0; j < inst.job_count(); ++j) {
    for (int k : inst.scenarios_of(j)) ++counts[sched.assignment[j]][k];
  }
  return counts;
}

Cost scaled_potential(const Instance& inst, const std::vector<std::vector<int>>& counts) {
  Cost total = 0;
  for (const auto& row : counts) {
    for (int k = 0; k < inst.scenario_count(); ++k) {
      const Cost gap = static_cast<Cost>(inst.machines()) * row[k] -
                       static_cast<Cost>(inst.scenario_jobs(k).size());
      total += gap < 0 ? -gap : gap;
    }
  }
  return total;
}

}  // namespace

EqualizeAllResult equalize_all(const Instance& inst, const Schedule& sched,
                               const EqualizeAllOptions& options) {
  validate(inst, sched);
  require_unit(inst, "equalize");
  const int k_count = inst.scenario_count();
  const int m = inst.machines();

  EqualizeAllResult result;
  switch (options.mode) {
    case ThresholdMode::Custom: result.f = options.custom_f; break;
    case ThresholdMode::Measured: result.f = measured_f(k_count); break;
    case ThresholdMode::ClosedForm: {
      auto f = closed_form_f(k_count);
      if (!f) throw GuardError("closed-form bound overflows for K=" + std::to_string(k_count));
      result.f = *f;
      break;
    }
    case ThresholdMode::Auto: {
      auto f = k_count <= 2 ? closed_form_f(k_count) : std::nullopt;
      result.f = f ? *f : measured_f(k_count);
      break;
    }
  }
  if (result.f < 0) throw ContractError("threshold f must be nonnegative");

  result.schedule = sched;
  result.before = disbalance(inst, sched);
  auto counts = machine_counts(inst, result.schedule);
  result.scaled_potentials.push_back(scaled_potential(inst, counts));

  if (m == 2) {
    result.schedule = equalize_two(inst, result.schedule, 0, 1).schedule;
    result.pair_calls = 1;
  } else if (m > 2) {
    // |count - L_k| > 2K f, scaled by m to stay integral.
    const Cost limit = 2 * static_cast<Cost>(k_count) * result.f * m;
    while (true) {
      int machine = -1, scenario = -1;
      for (int i = 0; i < m && machine < 0; ++i) {
        for (int k = 0; k < k_count; ++k) {
          const Cost gap = static_cast<Cost>(m) * counts[i][k] - static_cast<Cost>(inst.scenario_jobs(k).size());
          if ((gap < 0 ? -gap : gap) > limit) {
            machine = i;
            scenario = k;
            break;
          }
        }
      }
      if (machine < 0) break;
      if (result.iterations >= options.max_iterations) {
        throw GuardError("equalize_all hit the iteration cap of " + std::to_string(options.max_iterations));
      }
      const bool above = static_cast<Cost>(m) * counts[machine][scenario] >
                         static_cast<Cost>(inst.scenario_jobs(scenario).size());
      int partner = -1;
      for (int i = 0; i < m; ++i) {
        if (partner < 0 || (above ? counts[i][scenario] < counts[partner][scenario]
                                  : counts[i][scenario] > counts[partner][scenario])) {
          partner = i;
        }
      }
      result.schedule = equalize_two(inst, result.schedule, machine, partner).schedule;
      ++result.pair_calls;
      ++result.iterations;
      counts = machine_counts(inst, result.schedule);
      const Cost potential = scaled_potential(inst, counts);
      if (potential >= result.scaled_potentials.back()) {
        throw std::logic_error("equalize_all potential did not decrease");
      }
      result.scaled_potentials.push_back(potential);
    }
  }
  result.after = disbalance(inst, result.schedule);
  return result;
}

ProbeReport conjecture_probe(const ProbeOptions& options) {
  if (options.trials < 1) throw ContractError("probe needs at least one trial");
  ProbeReport report;
  report.lemma_bound = lemma_final_bound(options.scenarios);
  OracleOptions oracle;
  oracle.max_log2_size = options.max_log2_size;
  for (int t = 0; t < options.trials; ++t) {
    ProbeTrial trial;
    trial.seed = options.seed + static_cast<std::uint64_t>(t);
    const Instance inst = gen_random(options.n, options.machines, options.scenarios, options.w_max,
                                     options.density, trial.seed);
    trial.weights.assign(inst.weights().begin(), inst.weights().end());
    trial.scenarios = inst.canonical_scenarios();
    const auto optimal = all_optimal_schedules(inst, ObjectiveKind::MinAvgSum, oracle);
    trial.optimal_count = optimal.size();
    trial.min_full_disbalance = std::numeric_limits<int>::max();
    for (const auto& s : optimal) {
      const DisbalanceReport d = disbalance(inst, s);
      trial.min_full_disbalance = std::min(trial.min_full_disbalance, d.full_f);
      trial.max_final_disbalance = std::max(trial.max_final_disbalance, d.final_d);
    }
    report.max_observed = std::max(report.max_observed, trial.min_full_disbalance);
    report.trials.push_back(std::move(trial));
  }
  for (int t = 0; t < options.trials; ++t) {
    if (report.trials[t].min_full_disbalance == report.max_observed) report.maximizers.push_back(t);
  }
  return report;
}

}  // namespace scensched
