#pragma once

#include <limits>
#include <map>
#include <vector>

#include "vimax/max_flow.hpp"

namespace vimax {

// Flow-equivalent tree for a symmetric-capacity graph: for any pair (s, t)
// the minimum cut_value along the tree path equals max_flow(g, s, t).
struct GomoryHuTree {
  std::map<int, int> parent;          // root maps to itself
  std::map<int, Capacity> cut_value;  // root carries an infinite sentinel

  static constexpr Capacity kNoCut = std::numeric_limits<Capacity>::max();

  // Minimum edge value on the tree path between s and t.
  Capacity min_cut(int s, int t) const {
    std::map<int, Capacity> best_to_root;  // s's ancestors -> min so far
    Capacity run = kNoCut;
    for (int v = s;; v = parent.at(v)) {
      best_to_root[v] = run;
      if (parent.at(v) == v) break;
      run = std::min(run, cut_value.at(v));
    }
    run = kNoCut;
    for (int v = t;; v = parent.at(v)) {
      auto hit = best_to_root.find(v);
      if (hit != best_to_root.end()) return std::min(run, hit->second);
      run = std::min(run, cut_value.at(v));
      if (parent.at(v) == v) break;
    }
    throw argument_error("min_cut: vertices in different trees");
  }
};

// Gusfield's construction: |V| - 1 max-flow calls, no contractions.
inline GomoryHuTree gomory_hu(const Graph& g) {
  if (!g.symmetric())
    throw unsupported_structure(
        "gomory_hu requires a symmetric-capacity graph");
  GomoryHuTree tree;
  const std::vector<int>& vs = g.vertices();
  if (vs.empty()) return tree;
  for (int v : vs) tree.parent[v] = vs[0];
  tree.parent[vs[0]] = vs[0];
  tree.cut_value[vs[0]] = GomoryHuTree::kNoCut;

  detail::DenseFlow net(g);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    int s = vs[i];
    int t = tree.parent[s];
    Capacity f = net.run(net.pos(s), net.pos(t));
    tree.cut_value[s] = f;
    const std::vector<bool>& side = net.source_side();
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (tree.parent[vs[j]] == t && side[net.pos(vs[j])])
        tree.parent[vs[j]] = s;
  }
  return tree;
}

}  // namespace vimax
