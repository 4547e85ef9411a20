#pragma once

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vimax/instance_io.hpp"
#include "vimax/vitality.hpp"

namespace vimax {

// 3-CNF formula; literals are signed 1-based variable indices.
struct CnfFormula {
  int num_variables = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const {
    if (num_variables < 1)
      throw argument_error("formula needs at least one variable");
    for (const auto& clause : clauses) {
      for (int lit : clause) {
        if (lit == 0 || std::abs(lit) > num_variables)
          throw argument_error("literal out of range");
        for (int other : clause)
          if (other == -lit)
            throw argument_error(
                "clause contains a literal and its negation");
      }
    }
  }

  bool satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
      bool ok = false;
      for (int lit : clause) {
        bool value = assignment[std::abs(lit) - 1];
        if ((lit > 0) == value) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }
};

// DIMACS CNF: `c` comments, `p cnf <vars> <clauses>`, 0-terminated clauses
// of exactly three literals.
inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  CnfFormula f;
  bool have_header = false;
  long long expected_clauses = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw parse_error(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf")
        throw parse_error(lineno, "expected 'p cnf <vars> <clauses>'");
      f.num_variables =
          static_cast<int>(detail::parse_int(tok[2], lineno, "variables"));
      expected_clauses = detail::parse_int(tok[3], lineno, "clauses");
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(lineno, "clause before problem line");
    for (const std::string& t : tok) {
      int lit = static_cast<int>(detail::parse_int(t, lineno, "literal"));
      if (lit == 0) {
        if (pending.size() != 3)
          throw parse_error(lineno, "clauses must have exactly 3 literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!have_header) throw parse_error(lineno, "missing problem line");
  if (!pending.empty()) throw parse_error(lineno, "unterminated clause");
  if (static_cast<long long>(f.clauses.size()) != expected_clauses)
    throw parse_error(lineno, "clause count does not match problem line");
  f.validate();
  return f;
}

// Directed VIMAX instance encoding a 3SAT formula, with gadget-role
// bookkeeping: deciding whether some removal subset pushes the vitality to
// at least `threshold` answers satisfiability.
struct ReductionInstance {
  Instance instance;
  std::map<int, std::string> roles;  // vertex id -> gadget role
  int d1 = 0;
  int key = 0;
  int d2 = 0;
  std::vector<int> a, b, t, f;  // variable gadget vertices
  std::vector<int> u, v;        // clause gadget vertices
  long long leaf_count = 0;     // M = 8(m + n + nm)
  Capacity threshold = 0;       // C = (M+1)^2 (n + m)
};

inline ReductionInstance reduce_3sat(const CnfFormula& formula) {
  formula.validate();
  long long n = formula.num_variables;
  long long m = static_cast<long long>(formula.clauses.size());

  ReductionInstance r;
  r.leaf_count = 8 * (m + n + n * m);
  r.threshold = (r.leaf_count + 1) * (r.leaf_count + 1) * (n + m);

  Graph g(false);
  std::vector<std::string> labels;
  auto fresh = [&](const std::string& label, const std::string& role) {
    int id = static_cast<int>(labels.size());
    labels.push_back(label);
    g.add_vertex(id);
    r.roles[id] = role;
    return id;
  };
  auto arc = [&](int tail, int head, Capacity cap) {
    if (!g.has_arc(tail, head)) g.add_arc(tail, head, cap);
  };

  r.d1 = fresh("d1", "d1");
  r.key = fresh("k", "k");
  r.d2 = fresh("d2", "d2");
  arc(r.key, r.d2, n + m);

  for (long long i = 1; i <= n; ++i) {
    std::string suffix = std::to_string(i);
    int ai = fresh("a" + suffix, "a_" + suffix);
    int bi = fresh("b" + suffix, "b_" + suffix);
    int ti = fresh("t" + suffix, "t_" + suffix);
    int fi = fresh("f" + suffix, "f_" + suffix);
    r.a.push_back(ai);
    r.b.push_back(bi);
    r.t.push_back(ti);
    r.f.push_back(fi);
    arc(r.d1, ai, 2);
    arc(ai, ti, 2);
    arc(ai, fi, 2);
    arc(ti, bi, 1);
    arc(fi, bi, 1);
    arc(ti, r.d2, 1);
    arc(fi, r.d2, 1);
    arc(bi, r.key, 1);
  }

  for (long long j = 1; j <= m; ++j) {
    std::string suffix = std::to_string(j);
    int uj = fresh("u" + suffix, "u_" + suffix);
    int vj = fresh("v" + suffix, "v_" + suffix);
    r.u.push_back(uj);
    r.v.push_back(vj);
    arc(r.d1, uj, 1);
    arc(vj, r.key, 1);
    for (int lit : formula.clauses[j - 1]) {
      int var = std::abs(lit) - 1;
      int node = lit > 0 ? r.t[var] : r.f[var];
      arc(uj, node, 1);
      arc(node, vj, 1);
    }
  }

  for (long long l = 1; l <= r.leaf_count; ++l) {
    int leaf = fresh("in" + std::to_string(l), "leaf");
    arc(leaf, r.d1, 1);
  }
  for (long long l = 1; l <= r.leaf_count; ++l) {
    int leaf = fresh("out" + std::to_string(l), "leaf");
    arc(r.d2, leaf, 1);
  }

  r.instance.graph = std::move(g);
  r.instance.key_vertex = r.key;
  r.instance.budget = n;
  r.instance.pair_convention = PairConvention::ordered;
  r.instance.labels = std::move(labels);
  r.instance.validate();
  return r;
}

// The proof's structured removal subset: t_i for variables set false,
// f_i for variables set true.
inline std::set<int> assignment_subset(const ReductionInstance& r,
                                       const std::vector<bool>& assignment) {
  if (assignment.size() != r.t.size())
    throw argument_error("assignment must cover every variable");
  std::set<int> subset;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    subset.insert(assignment[i] ? r.f[i] : r.t[i]);
  return subset;
}

// Exhaustive oracle (2^n on each side): satisfiability of the formula must
// coincide with the existence of a one-per-variable subset S whose removal
// leaves pair_vitality(d1, d2) at least n + m. The proof shows an optimal
// subset always picks exactly one of {t_i, f_i} per variable, so searching
// that family is faithful.
inline bool check_reduction(const ReductionInstance& r,
                            const CnfFormula& formula) {
  formula.validate();
  long long n = formula.num_variables;
  long long m = static_cast<long long>(formula.clauses.size());
  if (n > 4 || m > 3)
    throw size_error("check_reduction oracle is limited to n <= 4, m <= 3");

  bool satisfiable = false;
  bool reachable = false;
  std::vector<bool> assignment(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (long long i = 0; i < n; ++i) assignment[i] = (bits >> i) & 1;
    if (formula.satisfied_by(assignment)) satisfiable = true;
    std::set<int> subset = assignment_subset(r, assignment);
    Graph reduced = remove_vertices(r.instance.graph, subset);
    if (pair_vitality(reduced, r.key, r.d1, r.d2) >= n + m) reachable = true;
    if (satisfiable && reachable) break;
  }
  return satisfiable == reachable;
}

}  // namespace vimax
