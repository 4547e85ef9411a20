#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vimax/errors.hpp"

namespace vimax {

using Capacity = long long;
using Weight = long long;

struct Arc {
  int tail = 0;
  int head = 0;
  Capacity capacity = 0;
};

enum class PairConvention { ordered, unordered };

inline const char* to_string(PairConvention pc) {
  return pc == PairConvention::ordered ? "ordered" : "unordered";
}

// Capacitated graph over non-negative integer vertex ids. A symmetric graph
// models an undirected network: its arc set is closed under reversal with
// equal capacity, which add_edge maintains. Vertex ids are stable across
// remove_vertices, so subgraphs keep the original ids.
class Graph {
 public:
  explicit Graph(bool symmetric = true) : symmetric_(symmetric) {}

  bool symmetric() const { return symmetric_; }
  const std::vector<int>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  // Number of undirected edges on symmetric graphs, arcs otherwise.
  std::size_t edge_count() const {
    return symmetric_ ? arcs_.size() / 2 : arcs_.size();
  }

  bool has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_arc(int tail, int head) const {
    return caps_.find({tail, head}) != caps_.end();
  }

  Capacity arc_capacity(int tail, int head) const {
    auto it = caps_.find({tail, head});
    if (it == caps_.end())
      throw argument_error("no arc " + std::to_string(tail) + "->" +
                           std::to_string(head));
    return it->second;
  }

  Weight weight(int v) const { return weights_[index_of(v)]; }

  void set_weight(int v, Weight w) {
    if (w < 1) throw argument_error("vertex weight must be >= 1");
    weights_[index_of(v)] = w;
  }

  // Idempotent; keeps an existing vertex's weight.
  void add_vertex(int id) {
    if (id < 0) throw argument_error("vertex ids must be non-negative");
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it != vertices_.end() && *it == id) return;
    weights_.insert(weights_.begin() + (it - vertices_.begin()), 1);
    vertices_.insert(it, id);
  }

  // Undirected edge: an antiparallel arc pair of equal capacity.
  void add_edge(int u, int v, Capacity c) {
    check_new_arc(u, v, c);
    if (has_arc(v, u)) throw argument_error("duplicate edge");
    add_vertex(u);
    add_vertex(v);
    push_arc(u, v, c);
    push_arc(v, u, c);
  }

  void add_arc(int tail, int head, Capacity c) {
    if (symmetric_)
      throw argument_error("add_arc on a symmetric graph; use add_edge");
    check_new_arc(tail, head, c);
    add_vertex(tail);
    add_vertex(head);
    push_arc(tail, head, c);
  }

  // Union of in- and out-neighbors, ascending.
  std::vector<int> neighbors(int v) const {
    std::set<int> out;
    for (const Arc& a : arcs_) {
      if (a.tail == v) out.insert(a.head);
      if (a.head == v) out.insert(a.tail);
    }
    return {out.begin(), out.end()};
  }

  std::vector<std::pair<int, Capacity>> out_arcs(int v) const {
    std::vector<std::pair<int, Capacity>> out;
    for (const Arc& a : arcs_)
      if (a.tail == v) out.emplace_back(a.head, a.capacity);
    return out;
  }

  bool operator==(const Graph& o) const {
    return symmetric_ == o.symmetric_ && vertices_ == o.vertices_ &&
           weights_ == o.weights_ && caps_ == o.caps_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  std::size_t index_of(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw argument_error("unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  void check_new_arc(int tail, int head, Capacity c) const {
    if (tail == head) throw argument_error("self-loops are not allowed");
    if (c < 0) throw argument_error("capacities must be non-negative");
    if (tail < 0 || head < 0)
      throw argument_error("vertex ids must be non-negative");
    if (has_arc(tail, head)) throw argument_error("duplicate edge");
  }

  void push_arc(int tail, int head, Capacity c) {
    arcs_.push_back({tail, head, c});
    caps_[{tail, head}] = c;
  }

  bool symmetric_ = true;
  std::vector<int> vertices_;   // sorted
  std::vector<Weight> weights_;  // parallel to vertices_
  std::vector<Arc> arcs_;        // insertion order
  std::map<std::pair<int, int>, Capacity> caps_;
};

// Induced subgraph on V \ removed; weights and the symmetric flag carry over.
inline Graph remove_vertices(const Graph& g, const std::set<int>& removed) {
  for (int v : removed)
    if (!g.has_vertex(v))
      throw argument_error("remove_vertices: unknown vertex " +
                           std::to_string(v));
  Graph out(g.symmetric());
  for (int v : g.vertices()) {
    if (removed.count(v)) continue;
    out.add_vertex(v);
    out.set_weight(v, g.weight(v));
  }
  for (const Arc& a : g.arcs()) {
    if (removed.count(a.tail) || removed.count(a.head)) continue;
    if (g.symmetric()) {
      if (a.tail < a.head) out.add_edge(a.tail, a.head, a.capacity);
    } else {
      out.add_arc(a.tail, a.head, a.capacity);
    }
  }
  return out;
}

// Solver input: graph + key vertex + removal budget + pair convention.
struct Instance {
  Graph graph;
  int key_vertex = 0;
  long long budget = 0;
  PairConvention pair_convention = PairConvention::unordered;
  // External label per internal id; empty labels fall back to decimal ids.
  std::vector<std::string> labels;

  std::string label(int id) const {
    if (id >= 0 && static_cast<std::size_t>(id) < labels.size() &&
        !labels[id].empty())
      return labels[id];
    return std::to_string(id);
  }

  std::optional<int> find_label(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  void validate() const {
    if (!graph.has_vertex(key_vertex))
      throw argument_error("key vertex " + std::to_string(key_vertex) +
                           " is not in the graph");
    if (budget < 0) throw argument_error("budget must be non-negative");
    if (graph.vertex_count() > 0 &&
        budget > static_cast<long long>(graph.vertex_count()) - 1)
      throw argument_error("budget exceeds |V| - 1");
    if (pair_convention == PairConvention::unordered && !graph.symmetric())
      throw argument_error(
          "unordered pair convention requires a symmetric graph");
  }
};

// Label-keyed structural equality, insensitive to internal id assignment.
inline bool equivalent(const Instance& a, const Instance& b) {
  if (a.budget != b.budget || a.pair_convention != b.pair_convention)
    return false;
  if (a.graph.symmetric() != b.graph.symmetric()) return false;
  if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
  if (a.graph.arc_count() != b.graph.arc_count()) return false;
  if (a.label(a.key_vertex) != b.label(b.key_vertex)) return false;
  std::map<std::string, Weight> wa, wb;
  for (int v : a.graph.vertices()) wa[a.label(v)] = a.graph.weight(v);
  for (int v : b.graph.vertices()) wb[b.label(v)] = b.graph.weight(v);
  if (wa != wb) return false;
  std::map<std::pair<std::string, std::string>, Capacity> ea, eb;
  for (const Arc& arc : a.graph.arcs())
    ea[{a.label(arc.tail), a.label(arc.head)}] = arc.capacity;
  for (const Arc& arc : b.graph.arcs())
    eb[{b.label(arc.tail), b.label(arc.head)}] = arc.capacity;
  return ea == eb;
}

// A removal subset with the vitality it achieves.
struct Solution {
  std::vector<int> removed;      // sorted vertex ids
  Capacity vitality = 0;         // L_k(G \ S)
  Capacity vitality_effect = 0;  // L_k(G \ S) - L_k(G)
  std::string method;
  double elapsed_seconds = 0.0;
  long long evaluations = 0;  // vitality computations performed
};

}  // namespace vimax
