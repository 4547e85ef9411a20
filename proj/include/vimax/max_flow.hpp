#pragma once

#include <limits>
#include <set>
#include <vector>

#include "vimax/graph.hpp"

namespace vimax {

struct FlowResult {
  Capacity value = 0;
  std::set<int> source_side;  // minimum s-t cut witness containing s
};

namespace detail {

// Dinic's algorithm over a dense reindexing of a Graph. Reusable across
// (s, t) queries on the same graph; each run() starts from fresh residuals.
class DenseFlow {
 public:
  explicit DenseFlow(const Graph& g) : ids_(g.vertices()) {
    int n = static_cast<int>(ids_.size());
    for (int p = 0; p < n; ++p) pos_[ids_[p]] = p;
    first_.assign(n, -1);
    level_.assign(n, 0);
    iter_.assign(n, 0);
    for (const Arc& a : g.arcs()) add_edge(pos_[a.tail], pos_[a.head], a.capacity);
  }

  // Direct construction for synthetic networks (e.g. split graphs).
  explicit DenseFlow(int n) {
    ids_.resize(n);
    for (int p = 0; p < n; ++p) ids_[p] = p, pos_[p] = p;
    first_.assign(n, -1);
    level_.assign(n, 0);
    iter_.assign(n, 0);
  }

  void add_edge(int from, int to, Capacity cap) {
    edges_.push_back({to, next_of(from), cap, cap});
    first_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, next_of(to), 0, 0});
    first_[to] = static_cast<int>(edges_.size()) - 1;
  }

  int pos(int id) const { return pos_.at(id); }
  int size() const { return static_cast<int>(ids_.size()); }

  Capacity run(int s_pos, int t_pos) {
    for (Edge& e : edges_) e.residual = e.capacity;
    Capacity flow = 0;
    while (bfs(s_pos, t_pos)) {
      iter_ = first_;
      Capacity pushed;
      while ((pushed = dfs(s_pos, t_pos, kInf)) > 0) flow += pushed;
    }
    compute_side(s_pos);
    check_duality(flow);
    return flow;
  }

  // Dense positions reachable from s in the last run's residual network.
  const std::vector<bool>& source_side() const { return side_; }

  std::set<int> source_side_ids() const {
    std::set<int> out;
    for (int p = 0; p < size(); ++p)
      if (side_[p]) out.insert(ids_[p]);
    return out;
  }

 private:
  static constexpr Capacity kInf = std::numeric_limits<Capacity>::max() / 4;

  struct Edge {
    int to;
    int next;  // next edge index out of the same tail, -1 terminates
    Capacity residual;
    Capacity capacity;
  };

  int next_of(int v) const { return first_[v]; }

  bool bfs(int s, int t) {
    level_.assign(size(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (int e = first_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].residual <= 0 || level_[edges_[e].to] >= 0) continue;
        level_[edges_[e].to] = level_[v] + 1;
        queue_.push_back(edges_[e].to);
      }
    }
    return level_[t] >= 0;
  }

  Capacity dfs(int v, int t, Capacity limit) {
    if (v == t) return limit;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
      Edge& fwd = edges_[e];
      if (fwd.residual <= 0 || level_[fwd.to] != level_[v] + 1) continue;
      Capacity got = dfs(fwd.to, t, std::min(limit, fwd.residual));
      if (got > 0) {
        fwd.residual -= got;
        edges_[e ^ 1].residual += got;
        return got;
      }
    }
    return 0;
  }

  void compute_side(int s) {
    side_.assign(size(), false);
    queue_.clear();
    queue_.push_back(s);
    side_[s] = true;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (int e = first_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].residual <= 0 || side_[edges_[e].to]) continue;
        side_[edges_[e].to] = true;
        queue_.push_back(edges_[e].to);
      }
    }
  }

  // Max-flow/min-cut duality: the cut induced by the residual source side
  // must carry exactly the flow value.
  void check_duality(Capacity flow) const {
    Capacity cut = 0;
    for (std::size_t e = 0; e < edges_.size(); e += 2) {
      int tail = edges_[e ^ 1].to;
      if (side_[tail] && !side_[edges_[e].to]) cut += edges_[e].capacity;
    }
    if (cut != flow)
      throw std::logic_error("max-flow/min-cut duality violated");
  }

  std::vector<int> ids_;
  std::map<int, int> pos_;
  std::vector<int> first_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<int> queue_;
  std::vector<bool> side_;
};

}  // namespace detail

// Exact integer maximum s-t flow with a minimum-cut witness. Disconnected
// s and t yield value 0 (with the cut witness on s's side).
inline FlowResult max_flow(const Graph& g, int s, int t) {
  if (s == t) throw argument_error("max_flow requires s != t");
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw argument_error("max_flow: vertex not in graph");
  detail::DenseFlow net(g);
  FlowResult r;
  r.value = net.run(net.pos(s), net.pos(t));
  r.source_side = net.source_side_ids();
  return r;
}

}  // namespace vimax
