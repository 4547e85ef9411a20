#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "vimax/preprocess.hpp"
#include "vimax/vitality.hpp"

namespace vimax {

// Simulated-annealing knobs. The defaults mirror the reference setup:
// 10,000 iterations, multiplicative cooling at 0.95, single- and
// two-vertex toggles with equal probability.
struct SAParams {
  long long max_iterations = 10000;
  double cooling_factor = 0.95;
  double pair_toggle_probability = 0.5;
  std::optional<double> initial_temperature;  // derived from L_k(G) when unset
  std::uint64_t seed = 0;

  void validate() const {
    if (max_iterations < 1) throw argument_error("max_iterations must be >= 1");
    if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
      throw argument_error("cooling_factor must be in (0, 1)");
    if (!(pair_toggle_probability >= 0.0 && pair_toggle_probability <= 1.0))
      throw argument_error("pair_toggle_probability must be in [0, 1]");
  }
};

// Smallest T such that a solution at 90% of the initial objective is
// accepted with probability at least 95%: exp(-0.1 e / T) = 0.95. An
// objective of zero floors to one so the temperature stays positive.
inline double initial_temperature(Capacity e_init) {
  if (e_init < 0) throw argument_error("objective must be non-negative");
  double tenth = 0.1 * static_cast<double>(std::max<Capacity>(e_init, 1));
  return tenth / (-std::log(0.95));
}

namespace detail {

inline double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t pick_below(std::mt19937_64& rng, std::size_t n) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

// Objective evaluator over removal subsets, with a per-run memo keyed by a
// candidate bitmask when the pool fits in 64 bits.
class Objective {
 public:
  Objective(const Instance& inst, std::vector<int> cands)
      : inst_(inst), cands_(std::move(cands)) {
    use_mask_ = cands_.size() <= 64;
  }

  Capacity operator()(const std::set<int>& S) {
    std::uint64_t key = 0;
    if (use_mask_) {
      for (int v : S) {
        auto it = std::lower_bound(cands_.begin(), cands_.end(), v);
        if (it != cands_.end() && *it == v)
          key |= std::uint64_t{1} << (it - cands_.begin());
        else
          key = kNoKey;  // outside the pool, do not memoize
      }
      if (key != kNoKey) {
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;
      }
    }
    Graph reduced = remove_vertices(inst_.graph, S);
    Capacity value =
        vitality(reduced, inst_.key_vertex, inst_.pair_convention);
    ++evaluations;
    if (use_mask_ && key != kNoKey) memo_.emplace(key, value);
    return value;
  }

  long long evaluations = 0;

 private:
  static constexpr std::uint64_t kNoKey = ~std::uint64_t{0};
  const Instance& inst_;
  std::vector<int> cands_;
  bool use_mask_ = false;
  std::unordered_map<std::uint64_t, Capacity> memo_;
};

// More than |N(k)| - 2 of k's neighbors removed makes k a leaf or isolated;
// such subsets can never improve on the empty set.
class NeighborRule {
 public:
  NeighborRule(const Graph& g, int k) {
    auto nk = g.neighbors(k);
    nbrs_.insert(nk.begin(), nk.end());
  }

  bool allows(const std::set<int>& S) const {
    long long overlap = 0;
    for (int v : S) overlap += nbrs_.count(v);
    return overlap <= static_cast<long long>(nbrs_.size()) - 2;
  }

 private:
  std::set<int> nbrs_;
};

// Sum of C(n, j) for j <= budget, saturating just above `cap`.
inline long long feasible_subset_count(std::size_t n, long long budget,
                                       long long cap) {
  long long total = 0;
  unsigned long long binom = 1;
  for (long long j = 0; j <= budget; ++j) {
    total += static_cast<long long>(binom);
    if (total > cap) return cap + 1;
    if (j >= static_cast<long long>(n)) break;
    unsigned long long factor = n - j;
    if (binom > static_cast<unsigned long long>(cap) * 4 / factor + 1)
      return cap + 1;
    binom = binom * factor / (j + 1);
  }
  return total;
}

// One sequential toggle pass in ascending candidate order, keeping strict
// improvements.
inline void local_pass(const std::vector<int>& cands, long long budget,
                       const NeighborRule& rule, Objective& objective,
                       std::set<int>& S, Capacity& value) {
  for (int c : cands) {
    std::set<int> next = S;
    if (!next.erase(c)) next.insert(c);
    if (static_cast<long long>(next.size()) > budget) continue;
    if (!next.empty() && !rule.allows(next)) continue;
    Capacity v = objective(next);
    if (v > value) {
      S = std::move(next);
      value = v;
    }
  }
}

inline Solution make_solution(std::string method, const std::set<int>& S,
                              Capacity value, Capacity initial,
                              long long evaluations,
                              std::chrono::steady_clock::time_point t0) {
  Solution sol;
  sol.removed.assign(S.begin(), S.end());
  sol.vitality = value;
  sol.vitality_effect = value - initial;
  sol.method = std::move(method);
  sol.evaluations = evaluations;
  sol.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return sol;
}

}  // namespace detail

// Exact optimum over all removal subsets drawn from candidates(inst) with
// |S| <= budget. Theorem-2 pruning keeps this exact over all subsets of
// V \ {k}. Ties prefer smaller, then lexicographically smaller sets.
inline Solution solve_exact(const Instance& inst,
                            long long subset_cap = 5'000'000) {
  inst.validate();
  auto t0 = std::chrono::steady_clock::now();
  std::set<int> cand_set = candidates(inst);
  std::vector<int> cands(cand_set.begin(), cand_set.end());

  long long count =
      detail::feasible_subset_count(cands.size(), inst.budget, subset_cap);
  if (count > subset_cap)
    throw size_error("exact search space exceeds " +
                     std::to_string(subset_cap) +
                     " subsets; use the annealing solver instead");

  detail::Objective objective(inst, cands);
  detail::NeighborRule rule(inst.graph, inst.key_vertex);

  std::set<int> best;
  Capacity initial = objective({});
  Capacity best_value = initial;

  long long max_size = std::min<long long>(
      inst.budget, static_cast<long long>(cands.size()));
  std::vector<std::size_t> idx;
  for (long long size = 1; size <= max_size; ++size) {
    idx.resize(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::set<int> S;
      for (std::size_t i : idx) S.insert(cands[i]);
      if (rule.allows(S)) {
        Capacity v = objective(S);
        if (v > best_value) {
          best_value = v;
          best = S;
        }
      }
      // next combination
      long long pos = size - 1;
      while (pos >= 0 && idx[pos] == cands.size() - (size - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (long long i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return detail::make_solution("exact", best, best_value, initial,
                               objective.evaluations, t0);
}

// Budget-1 brute force, reported as its own method to mirror the
// single-removal results.
inline Solution solve_single(const Instance& inst) {
  Instance one = inst;
  one.budget = std::min<long long>(inst.budget, 1);
  if (inst.graph.vertex_count() > 1) one.budget = 1;
  Solution sol = solve_exact(one);
  sol.method = "single";
  return sol;
}

// Single sequential local-search pass from S0.
inline Solution local_search(const Instance& inst, const std::set<int>& S0) {
  inst.validate();
  auto t0 = std::chrono::steady_clock::now();
  std::set<int> cand_set = candidates(inst);
  for (int v : S0)
    if (!cand_set.count(v))
      throw argument_error("local_search: start set must be drawn from the "
                           "candidate pool");
  if (static_cast<long long>(S0.size()) > inst.budget)
    throw argument_error("local_search: start set exceeds the budget");
  std::vector<int> cands(cand_set.begin(), cand_set.end());
  detail::Objective objective(inst, cands);
  detail::NeighborRule rule(inst.graph, inst.key_vertex);
  Capacity initial = objective({});
  std::set<int> S = S0;
  Capacity value = objective(S);
  detail::local_pass(cands, inst.budget, rule, objective, S, value);
  return detail::make_solution("local-search", S, value, initial,
                               objective.evaluations, t0);
}

// Simulated annealing: single- or two-vertex toggles over the candidate
// pool, acceptance probability exp(-(e_max - e0)/T) against the best
// objective seen so far, multiplicative cooling each iteration, and one
// terminal local-search pass over the best solution. The empty set is the
// starting incumbent, so the result never falls below L_k(G).
// Deterministic for a fixed (instance, params, seed).
inline Solution anneal(const Instance& inst, const SAParams& params = {}) {
  inst.validate();
  params.validate();
  auto t0 = std::chrono::steady_clock::now();
  std::set<int> cand_set = candidates(inst);
  std::vector<int> cands(cand_set.begin(), cand_set.end());
  detail::Objective objective(inst, cands);
  detail::NeighborRule rule(inst.graph, inst.key_vertex);

  Capacity initial = objective({});
  std::set<int> best;
  Capacity best_value = initial;
  if (inst.budget == 0 || cands.empty())
    return detail::make_solution("anneal", best, best_value, initial,
                                 objective.evaluations, t0);

  std::mt19937_64 rng(params.seed);
  double temperature =
      params.initial_temperature.value_or(initial_temperature(initial));
  std::set<int> current = best;
  Capacity current_value = best_value;

  for (long long iter = 0; iter < params.max_iterations;
       ++iter, temperature *= params.cooling_factor) {
    bool pair = detail::unit_real(rng) < params.pair_toggle_probability &&
                cands.size() >= 2;
    std::set<int> next = current;
    auto toggle = [&](std::size_t i) {
      if (!next.erase(cands[i])) next.insert(cands[i]);
    };
    std::size_t first = detail::pick_below(rng, cands.size());
    toggle(first);
    if (pair) {
      std::size_t second = detail::pick_below(rng, cands.size() - 1);
      if (second >= first) ++second;
      toggle(second);
    }
    if (static_cast<long long>(next.size()) > inst.budget) continue;
    if (!next.empty() && !rule.allows(next)) continue;

    Capacity value = objective(next);
    bool accept = value >= current_value;
    if (!accept) {
      double p = std::exp(-static_cast<double>(best_value - value) /
                          temperature);
      accept = detail::unit_real(rng) < p;
    }
    if (accept) {
      current = std::move(next);
      current_value = value;
      if (value > best_value) {
        best_value = value;
        best = current;
      }
    }
  }

  detail::local_pass(cands, inst.budget, rule, objective, best, best_value);
  return detail::make_solution("anneal", best, best_value, initial,
                               objective.evaluations, t0);
}

}  // namespace vimax
