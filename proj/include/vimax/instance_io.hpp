#pragma once

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vimax/graph.hpp"

namespace vimax {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, int line,
                           const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error(line, std::string("expected integer ") + what +
                                ", got '" + tok + "'");
  return value;
}

}  // namespace detail

// Line-oriented instance format:
//   # comment
//   graph <directed|undirected>
//   key <vertex>
//   budget <int>
//   pairs <ordered|unordered>        (optional)
//   vertex <name> [weight]           (optional; isolated or weighted vertices)
//   edge <u> <v> <capacity>
// Vertices are arbitrary whitespace-free tokens, mapped to dense internal
// ids in order of first appearance. Undirected edge lines expand to two
// antiparallel arcs of equal capacity.
inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  bool have_graph = false, have_key = false, have_pairs = false;
  bool symmetric = true;
  std::string key_label;
  int key_line = 0;
  long long budget = 0;
  PairConvention pairs = PairConvention::unordered;

  std::vector<std::string> labels;
  std::map<std::string, int> id_of;
  std::vector<Weight> weights;
  struct EdgeLine {
    int u, v;
    Capacity cap;
    int line;
  };
  std::vector<EdgeLine> edges;

  auto intern = [&](const std::string& name) {
    auto it = id_of.find(name);
    if (it != id_of.end()) return it->second;
    int id = static_cast<int>(labels.size());
    id_of.emplace(name, id);
    labels.push_back(name);
    weights.push_back(1);
    return id;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "graph") {
      if (tok.size() != 2) throw parse_error(lineno, "graph takes one value");
      if (tok[1] == "directed")
        symmetric = false;
      else if (tok[1] == "undirected")
        symmetric = true;
      else
        throw parse_error(lineno, "graph must be directed or undirected");
      have_graph = true;
    } else if (kw == "key") {
      if (tok.size() != 2) throw parse_error(lineno, "key takes one vertex");
      if (have_key) throw parse_error(lineno, "duplicate key directive");
      key_label = tok[1];
      key_line = lineno;
      have_key = true;
    } else if (kw == "budget") {
      if (tok.size() != 2) throw parse_error(lineno, "budget takes one value");
      budget = detail::parse_int(tok[1], lineno, "budget");
      if (budget < 0) throw parse_error(lineno, "budget must be non-negative");
    } else if (kw == "pairs") {
      if (tok.size() != 2) throw parse_error(lineno, "pairs takes one value");
      if (tok[1] == "ordered")
        pairs = PairConvention::ordered;
      else if (tok[1] == "unordered")
        pairs = PairConvention::unordered;
      else
        throw parse_error(lineno, "pairs must be ordered or unordered");
      have_pairs = true;
    } else if (kw == "vertex") {
      if (tok.size() != 2 && tok.size() != 3)
        throw parse_error(lineno, "vertex takes a name and optional weight");
      int id = intern(tok[1]);
      if (tok.size() == 3) {
        long long w = detail::parse_int(tok[2], lineno, "weight");
        if (w < 1) throw parse_error(lineno, "weight must be >= 1");
        weights[id] = w;
      }
    } else if (kw == "edge") {
      if (tok.size() != 4)
        throw parse_error(lineno, "edge takes <u> <v> <capacity>");
      if (!have_graph)
        throw parse_error(lineno, "edge before graph directive");
      if (tok[1] == tok[2])
        throw parse_error(lineno, "self-loops are not allowed");
      Capacity cap = detail::parse_int(tok[3], lineno, "capacity");
      if (cap < 0) throw parse_error(lineno, "capacity must be non-negative");
      edges.push_back({intern(tok[1]), intern(tok[2]), cap, lineno});
    } else {
      throw parse_error(lineno, "unknown directive '" + kw + "'");
    }
  }

  if (!have_graph) throw parse_error(lineno, "missing graph directive");
  if (!have_key) throw parse_error(lineno, "missing key-vertex directive");

  Instance inst;
  inst.graph = Graph(symmetric);
  for (std::size_t id = 0; id < labels.size(); ++id) {
    inst.graph.add_vertex(static_cast<int>(id));
    inst.graph.set_weight(static_cast<int>(id), weights[id]);
  }
  for (const auto& e : edges) {
    try {
      if (symmetric)
        inst.graph.add_edge(e.u, e.v, e.cap);
      else
        inst.graph.add_arc(e.u, e.v, e.cap);
    } catch (const argument_error& err) {
      throw parse_error(e.line, err.what());
    }
  }

  auto key_it = id_of.find(key_label);
  if (key_it == id_of.end())
    throw parse_error(key_line, "unknown key vertex '" + key_label + "'");
  inst.key_vertex = key_it->second;
  inst.budget = budget;
  inst.pair_convention = have_pairs ? pairs
                         : symmetric ? PairConvention::unordered
                                     : PairConvention::ordered;
  inst.labels = std::move(labels);
  inst.validate();
  return inst;
}

// Deterministic text form; parse_instance(write_instance(x)) is equivalent
// to x up to vertex ordering.
inline std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "graph " << (inst.graph.symmetric() ? "undirected" : "directed")
      << "\n";
  out << "pairs " << to_string(inst.pair_convention) << "\n";
  out << "key " << inst.label(inst.key_vertex) << "\n";
  out << "budget " << inst.budget << "\n";
  for (int v : inst.graph.vertices()) {
    bool isolated = inst.graph.neighbors(v).empty();
    Weight w = inst.graph.weight(v);
    if (w > 1)
      out << "vertex " << inst.label(v) << " " << w << "\n";
    else if (isolated)
      out << "vertex " << inst.label(v) << "\n";
  }
  std::vector<Arc> arcs = inst.graph.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
  });
  for (const Arc& a : arcs) {
    if (inst.graph.symmetric() && a.tail > a.head) continue;
    out << "edge " << inst.label(a.tail) << " " << inst.label(a.head) << " "
        << a.capacity << "\n";
  }
  return out.str();
}

}  // namespace vimax
