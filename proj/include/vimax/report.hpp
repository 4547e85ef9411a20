#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vimax/mip_export.hpp"
#include "vimax/vitality.hpp"

namespace vimax {

inline constexpr const char* kVersion = "0.1.0";

// Machine-readable run summary mirroring the benchmark table layout: one
// instance descriptor plus one entry per method.
struct RunReport {
  std::string source;
  Instance instance;
  Capacity initial_vitality = 0;
  std::optional<std::uint64_t> seed;
  std::vector<Solution> results;
};

// Emit as JSON, re-deriving every reported vitality from its removal set
// first; a mismatch means the report is corrupt and raises an error.
inline nlohmann::json to_json(const RunReport& report) {
  const Instance& inst = report.instance;
  nlohmann::json j;
  j["version"] = kVersion;
  j["instance"] = {
      {"source", report.source},
      {"vertices", inst.graph.vertex_count()},
      {"edges", inst.graph.edge_count()},
      {"key", inst.label(inst.key_vertex)},
      {"budget", inst.budget},
      {"pairs", to_string(inst.pair_convention)},
  };
  j["initial_vitality"] = report.initial_vitality;
  if (report.seed) j["seed"] = *report.seed;
  j["results"] = nlohmann::json::array();
  for (const Solution& sol : report.results) {
    std::set<int> removed(sol.removed.begin(), sol.removed.end());
    Capacity effect = vitality_effect(inst, removed);
    if (effect != sol.vitality_effect ||
        sol.vitality != report.initial_vitality + effect)
      throw validation_error("report self-check failed for method " +
                             sol.method);
    nlohmann::json entry;
    entry["method"] = sol.method;
    entry["vitality"] = sol.vitality;
    entry["vitality_effect"] = sol.vitality_effect;
    entry["removed"] = nlohmann::json::array();
    for (int v : sol.removed) entry["removed"].push_back(inst.label(v));
    entry["size"] = sol.removed.size();
    entry["elapsed_seconds"] = sol.elapsed_seconds;
    entry["evaluations"] = sol.evaluations;
    j["results"].push_back(std::move(entry));
  }
  return j;
}

}  // namespace vimax
