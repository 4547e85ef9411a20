#pragma once

#include <set>
#include <utility>
#include <vector>

#include "vimax/gomory_hu.hpp"
#include "vimax/max_flow.hpp"

namespace vimax {

// Unordered vertex pairs, stored normalized.
using PairSet = std::set<std::pair<int, int>>;

inline std::pair<int, int> normalized_pair(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

namespace detail {

// Sum of pairwise max-flow values over the vertices of g excluding `skip`
// (pass a vertex id absent from g to keep all). Each term is weighted by
// the product of the endpoint weights; excluded pairs are dropped. Uses a
// Gomory-Hu tree on symmetric graphs, pairwise max flow otherwise.
inline Capacity pairwise_flow_sum(const Graph& g, int skip, PairConvention pc,
                                  const PairSet& excluded) {
  if (pc == PairConvention::unordered && !g.symmetric())
    throw argument_error(
        "unordered pair convention requires a symmetric graph");
  std::vector<int> pool;
  for (int v : g.vertices())
    if (v != skip) pool.push_back(v);
  if (pool.size() < 2) return 0;

  auto skip_pair = [&](int s, int t) {
    return !excluded.empty() && excluded.count(normalized_pair(s, t)) > 0;
  };

  Capacity total = 0;
  if (g.symmetric()) {
    GomoryHuTree tree = gomory_hu(g);
    // Children lists once, then a tree walk per source gives all path
    // minima in O(n^2).
    std::map<int, std::vector<int>> adj;
    for (const auto& [v, p] : tree.parent)
      if (p != v) {
        adj[p].push_back(v);
        adj[v].push_back(p);
      }
    std::map<int, Capacity> reach;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      int s = pool[i];
      reach.clear();
      reach[s] = GomoryHuTree::kNoCut;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (reach.count(w)) continue;
          Capacity edge = tree.cut_value.at(tree.parent.at(v) == w ? v : w);
          reach[w] = std::min(reach[v], edge);
          stack.push_back(w);
        }
      }
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        int t = pool[j];
        if (t == s || skip_pair(s, t)) continue;
        total += g.weight(s) * g.weight(t) * reach.at(t);
      }
    }
    if (pc == PairConvention::ordered) total *= 2;
  } else {
    DenseFlow net(g);
    for (int s : pool)
      for (int t : pool) {
        if (s == t || skip_pair(s, t)) continue;
        total += g.weight(s) * g.weight(t) * net.run(net.pos(s), net.pos(t));
      }
  }
  return total;
}

}  // namespace detail

// Flow capacity of g with respect to k: the sum of pairwise max-flow values
// over all pairs not touching k, under the given pair convention.
inline Capacity flow_capacity(const Graph& g, int k, PairConvention pc,
                              const PairSet& excluded = {}) {
  if (!g.has_vertex(k))
    throw argument_error("flow_capacity: key vertex not in graph");
  return detail::pairwise_flow_sum(g, k, pc, excluded);
}

// All-pairs vitality of k: flow capacity with k present minus flow capacity
// of the same pair set once k is deleted. Never negative.
inline Capacity vitality(const Graph& g, int k, PairConvention pc,
                         const PairSet& excluded = {}) {
  if (!g.has_vertex(k))
    throw argument_error("vitality: key vertex not in graph");
  Capacity with_k = detail::pairwise_flow_sum(g, k, pc, excluded);
  Graph without = remove_vertices(g, {k});
  Capacity without_k = detail::pairwise_flow_sum(without, k, pc, excluded);
  return with_k - without_k;
}

// Single-pair vitality: drop in the s-t max flow when k is deleted.
inline Capacity pair_vitality(const Graph& g, int k, int s, int t) {
  if (k == s || k == t || s == t)
    throw argument_error("pair_vitality requires distinct k, s, t");
  Capacity with_k = max_flow(g, s, t).value;
  Capacity without_k = max_flow(remove_vertices(g, {k}), s, t).value;
  return with_k - without_k;
}

// Change in the key vertex's vitality caused by removing S. Positive means
// the removal diverted flow through the key vertex.
inline Capacity vitality_effect(const Instance& inst, const std::set<int>& S,
                                const PairSet& excluded = {}) {
  if (S.count(inst.key_vertex))
    throw argument_error("removal set must not contain the key vertex");
  Graph reduced = remove_vertices(inst.graph, S);
  return vitality(reduced, inst.key_vertex, inst.pair_convention, excluded) -
         vitality(inst.graph, inst.key_vertex, inst.pair_convention, excluded);
}

}  // namespace vimax
