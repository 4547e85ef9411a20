#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vimax/instance_io.hpp"
#include "vimax/solvers.hpp"

namespace vimax {

class generation_error : public error {
 public:
  using error::error;
};

// Shortest-path betweenness on the unweighted topology (capacities are
// ignored). Symmetric graphs count each pair once.
inline std::map<int, double> betweenness(const Graph& g) {
  const std::vector<int>& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[vs[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (const Arc& a : g.arcs()) adj[pos[a.tail]].push_back(pos[a.head]);

  std::vector<double> bc(n, 0.0);
  std::vector<long long> sigma(n);
  std::vector<int> dist(n);
  std::vector<double> delta(n);
  std::vector<std::vector<int>> preds(n);
  std::vector<int> order;
  for (int s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0);
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();
    sigma[s] = 1;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : preds[w])
        delta[v] += static_cast<double>(sigma[v]) / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  std::map<int, double> out;
  for (int i = 0; i < n; ++i)
    out[vs[i]] = g.symmetric() ? bc[i] / 2.0 : bc[i];
  return out;
}

namespace detail {

inline std::vector<std::string> decimal_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace detail

// Square M x M lattice with capacities drawn uniformly from 1..M, a key
// vertex chosen uniformly at random, and budget M. Deterministic per seed.
inline Instance gen_grid(int side, std::uint64_t seed) {
  if (side < 2) throw argument_error("grid side must be at least 2");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.graph = Graph(true);
  int n = side * side;
  for (int v = 0; v < n; ++v) inst.graph.add_vertex(v);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      int v = r * side + c;
      if (c + 1 < side)
        inst.graph.add_edge(
            v, v + 1,
            1 + static_cast<Capacity>(detail::pick_below(rng, side)));
      if (r + 1 < side)
        inst.graph.add_edge(
            v, v + side,
            1 + static_cast<Capacity>(detail::pick_below(rng, side)));
    }
  inst.key_vertex = static_cast<int>(detail::pick_below(rng, n));
  inst.budget = side;
  inst.pair_convention = PairConvention::unordered;
  inst.labels = detail::decimal_labels(n);
  inst.validate();
  return inst;
}

// Uniform connected G(n, m) by rejection: sample uniform m-edge graphs and
// reject disconnected ones. Capacities are uniform in 1..cap_max; the key
// vertex has the highest betweenness centrality (ties to the lowest id).
inline Instance gen_gnm(int n, long long m_edges, Capacity cap_max,
                        std::uint64_t seed) {
  if (n < 2) throw argument_error("gen_gnm requires at least 2 vertices");
  if (cap_max < 1) throw argument_error("cap_max must be at least 1");
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m_edges < n - 1 || m_edges > max_edges)
    throw argument_error("edge count must lie in [n-1, n(n-1)/2]");

  std::vector<std::pair<int, int>> universe;
  universe.reserve(max_edges);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) universe.emplace_back(i, j);

  std::mt19937_64 rng(seed);
  std::vector<int> parent(n);
  constexpr int kMaxAttempts = 1'000'000;
  std::vector<std::pair<int, int>> chosen;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxAttempts)
      throw generation_error(
          "no connected graph found within the rejection cap");
    for (long long i = 0; i < m_edges; ++i) {
      std::size_t j =
          i + detail::pick_below(rng, universe.size() - static_cast<std::size_t>(i));
      std::swap(universe[i], universe[j]);
    }
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int components = n;
    for (long long i = 0; i < m_edges; ++i) {
      int a = find(universe[i].first), b = find(universe[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) {
      chosen.assign(universe.begin(), universe.begin() + m_edges);
      break;
    }
  }
  std::sort(chosen.begin(), chosen.end());

  Instance inst;
  inst.graph = Graph(true);
  for (int v = 0; v < n; ++v) inst.graph.add_vertex(v);
  for (const auto& [u, v] : chosen)
    inst.graph.add_edge(
        u, v, 1 + static_cast<Capacity>(detail::pick_below(
                      rng, static_cast<std::size_t>(cap_max))));

  auto scores = betweenness(inst.graph);
  int key = 0;
  double best = -1.0;
  for (int v = 0; v < n; ++v)
    if (scores[v] > best + 1e-9) {
      best = scores[v];
      key = v;
    }
  inst.key_vertex = key;
  inst.budget = static_cast<long long>(std::floor(std::sqrt(n)));
  inst.pair_convention = PairConvention::unordered;
  inst.labels = detail::decimal_labels(n);
  inst.validate();
  return inst;
}

// Cocaine-trafficking network loader: `personA personB call_count` lines.
// The data must describe 28 people, 40 edges, and 151 calls in total.
// Unit mode sets all capacities to one; general mode uses the call counts.
// The key vertex defaults to boss "1" (callers pick a boss per run).
inline Instance load_drug_network(const std::string& text, bool unit_cap) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::vector<std::string> labels;
  std::map<std::string, int> id_of;
  auto intern = [&](const std::string& name) {
    auto it = id_of.find(name);
    if (it != id_of.end()) return it->second;
    int id = static_cast<int>(labels.size());
    id_of.emplace(name, id);
    labels.push_back(name);
    return id;
  };

  struct Row {
    int u, v;
    Capacity calls;
  };
  std::vector<Row> rows;
  std::set<std::pair<int, int>> seen;
  Capacity total_calls = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 3)
      throw parse_error(lineno, "expected 'personA personB call_count'");
    if (tok[0] == tok[1]) throw parse_error(lineno, "self-loop entry");
    Capacity calls = detail::parse_int(tok[2], lineno, "call count");
    if (calls < 1) throw parse_error(lineno, "call count must be positive");
    int u = intern(tok[0]), v = intern(tok[1]);
    if (!seen.insert(normalized_pair(u, v)).second)
      throw parse_error(lineno, "duplicate pair");
    rows.push_back({u, v, calls});
    total_calls += calls;
  }

  if (labels.size() != 28)
    throw data_error("drug network must have 28 people, found " +
                     std::to_string(labels.size()));
  if (rows.size() != 40)
    throw data_error("drug network must have 40 edges, found " +
                     std::to_string(rows.size()));
  if (total_calls != 151)
    throw data_error("drug network must total 151 calls, found " +
                     std::to_string(total_calls));

  Instance inst;
  inst.graph = Graph(true);
  for (std::size_t id = 0; id < labels.size(); ++id)
    inst.graph.add_vertex(static_cast<int>(id));
  for (const Row& r : rows)
    inst.graph.add_edge(r.u, r.v, unit_cap ? 1 : r.calls);
  auto boss = id_of.find("1");
  if (boss == id_of.end()) throw data_error("drug network is missing boss 1");
  inst.key_vertex = boss->second;
  inst.budget = 5;
  inst.pair_convention = PairConvention::unordered;
  inst.labels = std::move(labels);
  inst.validate();
  return inst;
}

}  // namespace vimax
