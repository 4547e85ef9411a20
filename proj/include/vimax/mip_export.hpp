#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vimax/instance_io.hpp"
#include "vimax/preprocess.hpp"
#include "vimax/vitality.hpp"

namespace vimax {

class validation_error : public error {
 public:
  using error::error;
};

enum class VarKind { binary, continuous, free_var };
enum class ConstraintSense { le, ge, eq };

struct MipVariable {
  std::string name;
  VarKind kind = VarKind::continuous;
};

struct MipConstraint {
  std::string name;
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  ConstraintSense sense = ConstraintSense::le;
  double rhs = 0.0;
};

// Solver-neutral model: maximization objective, named variables and
// constraints, insertion order preserved for deterministic output.
struct MipModel {
  std::vector<MipVariable> variables;
  std::map<std::string, int> variable_index;
  std::vector<MipConstraint> constraints;
  std::vector<std::pair<int, double>> objective;
  std::string instance_checksum;

  int add_variable(const std::string& name, VarKind kind) {
    if (!variable_index.emplace(name, static_cast<int>(variables.size()))
             .second)
      throw argument_error("duplicate variable name " + name);
    variables.push_back({name, kind});
    return static_cast<int>(variables.size()) - 1;
  }

  void add_constraint(std::string name,
                      std::vector<std::pair<int, double>> terms,
                      ConstraintSense sense, double rhs) {
    for (const auto& [idx, coeff] : terms) {
      (void)coeff;
      if (idx < 0 || idx >= static_cast<int>(variables.size()))
        throw argument_error("constraint references unknown variable");
    }
    constraints.push_back({std::move(name), std::move(terms), sense, rhs});
  }
};

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

inline std::string lp_number(double v) {
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9 && std::abs(v) < 1e15) {
    std::ostringstream out;
    out << static_cast<long long>(r);
    return out.str();
  }
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace detail

// VIMAX mixed-integer program: binary z_i keeps vertex i, w arcs link to z,
// per-pair primal flow (x, v) measures the flow capacity with the key
// vertex present while dual potentials (yv, ye) price the minimum cuts of
// the key-free graph, so the objective value equals the vitality of the key
// vertex at optimality. `strengthen` adds z_i = 1 for the Q-set and keeps
// at least two key neighbors. Vertex weights multiply pair terms, and
// excluded pairs are dropped, so simplified instances export faithfully.
inline MipModel build_mip(const Instance& inst, bool strengthen,
                          const PairSet& excluded = {},
                          long long variable_cap = 5'000'000) {
  inst.validate();
  const Graph& g = inst.graph;
  int k = inst.key_vertex;

  std::vector<int> others;
  for (int v : g.vertices())
    if (v != k) others.push_back(v);

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < others.size(); ++i)
    for (std::size_t j = 0; j < others.size(); ++j) {
      if (i == j) continue;
      int s = others[i], t = others[j];
      if (inst.pair_convention == PairConvention::unordered && s > t) continue;
      if (!excluded.empty() && excluded.count(normalized_pair(s, t))) continue;
      pairs.emplace_back(s, t);
    }

  std::vector<Arc> arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
  });
  std::vector<Arc> reduced_arcs;  // arcs that survive deleting k
  for (const Arc& a : arcs)
    if (a.tail != k && a.head != k) reduced_arcs.push_back(a);

  long long estimate =
      static_cast<long long>(g.vertex_count()) + static_cast<long long>(arcs.size()) +
      static_cast<long long>(pairs.size()) *
          (1 + static_cast<long long>(arcs.size()) +
           static_cast<long long>(others.size()) +
           static_cast<long long>(reduced_arcs.size()));
  if (estimate > variable_cap)
    throw size_error("MIP would need " + std::to_string(estimate) +
                     " variables, above the cap of " +
                     std::to_string(variable_cap));

  MipModel model;
  model.instance_checksum = detail::fnv1a_hex(write_instance(inst));

  auto vid = [](int v) { return std::to_string(v); };
  std::map<int, int> z;
  for (int v : g.vertices())
    z[v] = model.add_variable("z_" + vid(v), VarKind::binary);
  std::map<std::pair<int, int>, int> w;
  for (const Arc& a : arcs)
    w[{a.tail, a.head}] = model.add_variable(
        "w_" + vid(a.tail) + "_" + vid(a.head), VarKind::continuous);

  // Budget and key constraints, then w/z linking per arc.
  std::vector<std::pair<int, double>> budget_terms;
  for (int v : g.vertices()) budget_terms.emplace_back(z[v], 1.0);
  model.add_constraint(
      "budget", std::move(budget_terms), ConstraintSense::ge,
      static_cast<double>(g.vertex_count()) - static_cast<double>(inst.budget));
  model.add_constraint("key", {{z[k], 1.0}}, ConstraintSense::eq, 1.0);
  for (const Arc& a : arcs) {
    std::string arc_name = vid(a.tail) + "_" + vid(a.head);
    int wij = w[{a.tail, a.head}];
    model.add_constraint("w_le_tail_" + arc_name,
                         {{wij, 1.0}, {z[a.tail], -1.0}}, ConstraintSense::le,
                         0.0);
    model.add_constraint("w_le_head_" + arc_name,
                         {{wij, 1.0}, {z[a.head], -1.0}}, ConstraintSense::le,
                         0.0);
    model.add_constraint(
        "w_ge_sum_" + arc_name,
        {{wij, 1.0}, {z[a.tail], -1.0}, {z[a.head], -1.0}},
        ConstraintSense::ge, -1.0);
  }

  if (strengthen) {
    for (int v : q_set(g, k))
      model.add_constraint("q_" + vid(v), {{z[v], 1.0}}, ConstraintSense::eq,
                           1.0);
    std::vector<int> nk = g.neighbors(k);
    if (nk.size() >= 2) {
      std::vector<std::pair<int, double>> terms;
      for (int v : nk) terms.emplace_back(z[v], 1.0);
      model.add_constraint("keep_neighbors", std::move(terms),
                           ConstraintSense::ge, 2.0);
    }
  }

  // Per-pair blocks: flow value v, primal flows x, dual potentials yv/ye.
  for (const auto& [s, t] : pairs) {
    std::string st = vid(s) + "_" + vid(t);
    double pair_weight =
        static_cast<double>(g.weight(s)) * static_cast<double>(g.weight(t));
    int vst = model.add_variable("v_" + st, VarKind::continuous);
    model.objective.emplace_back(vst, pair_weight);

    std::map<std::pair<int, int>, int> x;
    for (const Arc& a : arcs)
      x[{a.tail, a.head}] = model.add_variable(
          "x_" + vid(a.tail) + "_" + vid(a.head) + "_" + st,
          VarKind::continuous);
    std::map<int, int> yv;
    for (int i : others)
      yv[i] = model.add_variable("yv_" + vid(i) + "_" + st, VarKind::free_var);
    std::map<std::pair<int, int>, int> ye;
    for (const Arc& a : reduced_arcs) {
      int idx = model.add_variable(
          "ye_" + vid(a.tail) + "_" + vid(a.head) + "_" + st,
          VarKind::continuous);
      ye[{a.tail, a.head}] = idx;
      model.objective.emplace_back(
          idx, -pair_weight * static_cast<double>(a.capacity));
    }

    for (int i : g.vertices()) {
      std::vector<std::pair<int, double>> terms;
      for (const Arc& a : arcs) {
        if (a.tail == i) terms.emplace_back(x[{a.tail, a.head}], 1.0);
        if (a.head == i) terms.emplace_back(x[{a.tail, a.head}], -1.0);
      }
      if (i == s) terms.emplace_back(vst, -1.0);
      if (i == t) terms.emplace_back(vst, 1.0);
      model.add_constraint("bal_" + vid(i) + "_" + st, std::move(terms),
                           ConstraintSense::eq, 0.0);
    }
    for (const Arc& a : arcs)
      model.add_constraint(
          "cap_" + vid(a.tail) + "_" + vid(a.head) + "_" + st,
          {{x[{a.tail, a.head}], 1.0},
           {w[{a.tail, a.head}], -static_cast<double>(a.capacity)}},
          ConstraintSense::le, 0.0);
    for (const Arc& a : reduced_arcs)
      model.add_constraint(
          "pot_" + vid(a.tail) + "_" + vid(a.head) + "_" + st,
          {{yv[a.tail], 1.0},
           {yv[a.head], -1.0},
           {ye[{a.tail, a.head}], 1.0},
           {w[{a.tail, a.head}], -1.0}},
          ConstraintSense::ge, -1.0);
    model.add_constraint("pair_" + st, {{yv[s], -1.0}, {yv[t], 1.0}},
                         ConstraintSense::ge, 1.0);
  }
  return model;
}

// Deterministic CPLEX-LP text: objective, constraints in insertion order,
// bounds for free variables, binary section.
inline std::string write_lp(const MipModel& model) {
  std::ostringstream out;
  out << "\\ vimax model\n";
  out << "\\ instance-checksum: " << model.instance_checksum << "\n";
  out << "Maximize\n";
  auto emit_terms = [&](const std::vector<std::pair<int, double>>& terms,
                        const std::string& indent) {
    int on_line = 0;
    bool first = true;
    for (const auto& [idx, coeff] : terms) {
      if (coeff == 0.0) continue;
      std::string mag = detail::lp_number(std::abs(coeff));
      std::string var = model.variables[idx].name;
      if (on_line == 8) {
        out << "\n" << indent;
        on_line = 0;
      }
      if (first) {
        if (coeff < 0) out << "- ";
        first = false;
      } else {
        out << (coeff < 0 ? " - " : " + ");
      }
      if (mag != "1") out << mag << " ";
      out << var;
      ++on_line;
    }
    if (first) out << "0";
  };
  out << " obj: ";
  emit_terms(model.objective, "      ");
  out << "\n";
  out << "Subject To\n";
  for (const MipConstraint& c : model.constraints) {
    out << " " << c.name << ": ";
    emit_terms(c.terms, "      ");
    switch (c.sense) {
      case ConstraintSense::le: out << " <= "; break;
      case ConstraintSense::ge: out << " >= "; break;
      case ConstraintSense::eq: out << " = "; break;
    }
    out << detail::lp_number(c.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const MipVariable& v : model.variables)
    if (v.kind == VarKind::free_var) out << " " << v.name << " free\n";
  out << "Binary\n";
  int on_line = 0;
  for (const MipVariable& v : model.variables) {
    if (v.kind != VarKind::binary) continue;
    if (on_line == 10) {
      out << "\n";
      on_line = 0;
    }
    out << " " << v.name;
    ++on_line;
  }
  if (on_line > 0) out << "\n";
  out << "End\n";
  return out.str();
}

// Parse an external solver's solution (`variable value` lines, `#`
// comments, optional `objective <value>` line), recover the removal set
// from the z variables, and cross-check the reported objective against a
// recomputed vitality.
inline Solution import_solution(const std::string& text,
                                const Instance& inst) {
  inst.validate();
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<std::string, double> values;
  bool have_objective = false;
  double objective = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw parse_error(lineno, "expected 'variable value'");
    try {
      double v = std::stod(tok[1]);
      if (tok[0] == "objective") {
        have_objective = true;
        objective = v;
      } else {
        values[tok[0]] = v;
      }
    } catch (const std::exception&) {
      throw parse_error(lineno, "bad numeric value '" + tok[1] + "'");
    }
  }

  constexpr double kTol = 1e-6;
  std::set<int> removed;
  for (int v : inst.graph.vertices()) {
    auto it = values.find("z_" + std::to_string(v));
    if (it == values.end())
      throw validation_error("solution is missing z_" + std::to_string(v));
    double zv = it->second;
    if (std::abs(zv) > kTol && std::abs(zv - 1.0) > kTol)
      throw validation_error("z_" + std::to_string(v) +
                             " is not binary within tolerance");
    if (zv < 0.5) removed.insert(v);
  }
  if (removed.count(inst.key_vertex))
    throw validation_error("solution removes the key vertex (z_k = 0)");
  if (static_cast<long long>(removed.size()) > inst.budget)
    throw validation_error("solution removes more vertices than the budget");

  Graph reduced = remove_vertices(inst.graph, removed);
  Capacity achieved =
      vitality(reduced, inst.key_vertex, inst.pair_convention);
  if (have_objective) {
    double rounded = std::round(objective);
    if (std::abs(objective - rounded) > kTol ||
        static_cast<Capacity>(rounded) != achieved)
      throw validation_error(
          "solver objective " + std::to_string(objective) +
          " does not match recomputed vitality " + std::to_string(achieved));
  }

  Solution sol;
  sol.removed.assign(removed.begin(), removed.end());
  sol.vitality = achieved;
  sol.vitality_effect =
      achieved - vitality(inst.graph, inst.key_vertex, inst.pair_convention);
  sol.method = "import";
  sol.evaluations = 2;
  return sol;
}

}  // namespace vimax
