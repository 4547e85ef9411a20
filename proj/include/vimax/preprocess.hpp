#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vimax/vitality.hpp"

namespace vimax {

// Q-set of k: vertices with fewer than two internally vertex-disjoint paths
// to k. Computed on the split graph where every vertex u becomes a
// unit-capacity arc (u_in, u_out), every arc (i, j) becomes a unit arc
// (i_out, j_in), and k's split arc is unbounded; u is in Q iff the
// u_out -> k_in max flow is at most 1. Removing a Q vertex never increases
// the vitality of k, so solvers ignore these vertices.
inline std::set<int> q_set(const Graph& g, int k) {
  if (!g.has_vertex(k)) throw argument_error("q_set: key vertex not in graph");
  const std::vector<int>& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[vs[i]] = i;
  auto in_node = [](int p) { return 2 * p; };
  auto out_node = [](int p) { return 2 * p + 1; };

  detail::DenseFlow net(2 * n);
  for (int i = 0; i < n; ++i)
    net.add_edge(in_node(i), out_node(i),
                 vs[i] == k ? static_cast<Capacity>(n) + 1 : 1);
  for (const Arc& a : g.arcs())
    net.add_edge(out_node(pos[a.tail]), in_node(pos[a.head]), 1);

  std::set<int> q;
  int k_in = in_node(pos[k]);
  for (int i = 0; i < n; ++i) {
    if (vs[i] == k) continue;
    if (net.run(out_node(i), k_in) <= 1) q.insert(vs[i]);
  }
  return q;
}

// Pool the solvers draw removal vertices from: V minus the key vertex and
// its Q-set. Leaves are always in Q, so they are excluded automatically.
inline std::set<int> candidates(const Instance& inst) {
  std::set<int> q = q_set(inst.graph, inst.key_vertex);
  std::set<int> out;
  for (int v : inst.graph.vertices())
    if (v != inst.key_vertex && !q.count(v)) out.insert(v);
  return out;
}

// Result of the vitality-preserving graph simplification: components that a
// cut vertex separates from the key vertex collapse into weighted leaves.
struct SimplifiedInstance {
  Instance instance;
  std::map<int, std::set<int>> origin;  // new id -> original ids
  PairSet excluded_pairs;  // new-id pairs whose flow never matters
  std::map<int, int> component_of;  // processed original id -> cut vertex
  std::string note;  // set when the input was left unchanged
};

namespace detail {

// Breadth-first path from u to k exploring neighbors in ascending id order;
// empty when k is unreachable.
inline std::vector<int> bfs_path(const Graph& g, int u, int k) {
  std::map<int, int> parent;
  parent[u] = u;
  std::vector<int> queue{u};
  for (std::size_t qi = 0; qi < queue.size() && !parent.count(k); ++qi)
    for (int w : g.neighbors(queue[qi]))
      if (!parent.count(w)) {
        parent[w] = queue[qi];
        queue.push_back(w);
      }
  if (!parent.count(k)) return {};
  std::vector<int> path;
  for (int v = k; v != u; v = parent[v]) path.push_back(v);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::set<int> component_without(const Graph& g, int start, int cut) {
  std::set<int> seen{start};
  std::vector<int> queue{start};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : g.neighbors(queue[qi]))
      if (w != cut && !seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
  return seen;
}

}  // namespace detail

// Collapse every component that a cut vertex separates from the key vertex:
// each such vertex t is replaced by a single edge (t, v) whose capacity is
// the t-v max flow in the original graph, and vertices of a component that
// end up with equal capacity merge into one weighted vertex. Pairs inside
// one component never contribute to the vitality effect and are excluded.
// Directed instances are returned unchanged.
inline SimplifiedInstance simplify(const Instance& inst) {
  inst.validate();
  SimplifiedInstance out;
  out.instance = inst;
  if (!inst.graph.symmetric()) {
    for (int v : inst.graph.vertices()) out.origin[v] = {v};
    out.note = "directed instance: simplification skipped";
    return out;
  }

  const Graph& g = inst.graph;
  int k = inst.key_vertex;
  std::set<int> q = q_set(g, k);

  struct Component {
    int cut;
    std::set<int> members;
  };
  std::vector<Component> comps;
  std::set<int> processed;
  for (int u : q) {
    if (processed.count(u)) continue;
    std::vector<int> path = detail::bfs_path(g, u, k);
    if (path.empty()) {
      // Disconnected from k: its pairs can never involve k, leave as is.
      processed.insert(u);
      continue;
    }
    int cut = k;
    for (std::size_t i = 1; i < path.size(); ++i)
      if (!q.count(path[i])) {
        cut = path[i];
        break;
      }
    Component comp{cut, detail::component_without(g, u, cut)};
    if (comp.members.count(k))
      throw std::logic_error("simplify: separator does not isolate component");
    for (int t : comp.members) {
      if (!q.count(t))
        throw std::logic_error("simplify: component escapes the Q-set");
      processed.insert(t);
      out.component_of[t] = cut;
    }
    comps.push_back(std::move(comp));
  }

  Graph reduced(true);
  for (int v : g.vertices()) {
    if (out.component_of.count(v)) continue;
    reduced.add_vertex(v);
    reduced.set_weight(v, g.weight(v));
    out.origin[v] = {v};
  }
  for (const Arc& a : g.arcs()) {
    if (a.tail >= a.head) continue;
    if (out.component_of.count(a.tail) || out.component_of.count(a.head))
      continue;
    reduced.add_edge(a.tail, a.head, a.capacity);
  }

  detail::DenseFlow net(g);
  for (const Component& comp : comps) {
    std::map<Capacity, std::set<int>> by_capacity;
    for (int t : comp.members)
      by_capacity[net.run(net.pos(t), net.pos(comp.cut))].insert(t);
    std::vector<int> new_ids;
    for (const auto& [cap, members] : by_capacity) {
      int rep = *members.begin();
      Weight w = 0;
      for (int t : members) w += g.weight(t);
      reduced.add_vertex(rep);
      reduced.set_weight(rep, w);
      reduced.add_edge(rep, comp.cut, cap);
      out.origin[rep] = members;
      new_ids.push_back(rep);
    }
    for (std::size_t i = 0; i < new_ids.size(); ++i)
      for (std::size_t j = i + 1; j < new_ids.size(); ++j)
        out.excluded_pairs.insert(normalized_pair(new_ids[i], new_ids[j]));
  }

  out.instance.graph = std::move(reduced);
  long long max_budget =
      static_cast<long long>(out.instance.graph.vertex_count()) - 1;
  out.instance.budget = std::min(inst.budget, std::max(0LL, max_budget));
  out.instance.validate();
  return out;
}

// Vitality effect evaluated on a simplified instance: weighted pair flows
// with the component-internal pairs excluded.
inline Capacity vitality_effect(const SimplifiedInstance& simp,
                                const std::set<int>& S) {
  const Instance& inst = simp.instance;
  if (S.count(inst.key_vertex))
    throw argument_error("removal set must not contain the key vertex");
  Graph reduced = remove_vertices(inst.graph, S);
  return vitality(reduced, inst.key_vertex, inst.pair_convention,
                  simp.excluded_pairs) -
         vitality(inst.graph, inst.key_vertex, inst.pair_convention,
                  simp.excluded_pairs);
}

}  // namespace vimax
