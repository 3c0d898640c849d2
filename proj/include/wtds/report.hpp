#pragma once

// JSON rendering of kernelization results.

#include <optional>

#include <json.hpp>

#include "bounds.hpp"
#include "kernel.hpp"

namespace wtds {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) {
  Json a = Json::array();
  for (VertexId v : s) a.push_back(v.value);
  return a;
}

inline Json to_json(const BoundLedger& ledger) {
  Json a = Json::array();
  for (const BoundCheck& b : ledger.entries())
    a.push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"satisfied", b.satisfied}});
  return a;
}

inline Json to_json(const RuleTrace& trace) {
  Json a = Json::array();
  for (const TraceStep& s : trace) {
    Json affected = Json::array(), created = Json::array();
    for (VertexId v : s.affected) affected.push_back(v.value);
    for (VertexId v : s.created) created.push_back(v.value);
    a.push_back({{"rule", s.rule},
                 {"affected", affected},
                 {"created", created},
                 {"k_before", s.k_before},
                 {"k_after", s.k_after}});
  }
  return a;
}

inline Json instance_summary(const Instance& inst) {
  return {{"n", inst.graph.vertex_count()},
          {"m", inst.graph.edge_count()},
          {"k", inst.k},
          {"total_weight", inst.total_weight()}};
}

struct Timings {
  double total_ms = 0;
};

inline Json to_json(const KernelReport& r, std::optional<Timings> timings = std::nullopt) {
  Json j;
  j["input"] = instance_summary(r.input);
  j["decided"] = r.decided ? to_string(*r.decided) : "kernel";
  if (r.decided) j["decided_by"] = r.decided_by;
  j["kernel"] = {{"n", r.kernel.graph.vertex_count()},
                 {"m", r.kernel.graph.edge_count()},
                 {"k", r.kernel.k},
                 {"c_m", r.c_m.size()},
                 {"c_g", r.c_g.size()},
                 {"i", r.i_set.size()},
                 {"i_kept", r.i_kept.size()}};
  j["bounds"] = to_json(r.bounds);
  j["bounds_satisfied"] = r.bounds.all_satisfied();
  j["trace"] = to_json(r.trace);
  if (timings) j["timings_ms"] = {{"total", timings->total_ms}};
  return j;
}

}  // namespace wtds
