#pragma once

// JSON report documents. Big integers are decimal strings and rationals are
// {"num": "...", "den": "..."}; no floating point values are emitted.

#include "relorder/numtheory.hpp"
#include "relorder/order_sums.hpp"
#include "relorder/verify.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace relorder {

inline constexpr const char* kSchemaVersion = "1.0";

using Json = nlohmann::json;

inline Json to_json(const BigInt& v) { return v.str(); }

inline Json to_json(const ExactRational& r) { return Json{{"num", r.num().str()}, {"den", r.den().str()}}; }

inline ExactRational rational_from_json(const Json& j) {
  return ExactRational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

inline Json to_json(const PsiReport& r) {
  return Json{{"group", r.group},
              {"group_order", r.group_order},
              {"subgroup", r.subgroup},
              {"subgroup_order", r.subgroup_order},
              {"psi_h", to_json(r.psi_h)},
              {"psi_cyclic_reference", to_json(r.psi_cyclic_reference)},
              {"ratio", to_json(r.ratio)},
              {"index_bound", to_json(r.index_bound)}};
}

inline Json to_json(const ViolationRecord& v) {
  return Json{{"group", v.group},
              {"group_order", v.group_order},
              {"subgroup_generators", v.subgroup_generators},
              {"subgroup_order", v.subgroup_order},
              {"psi_h", to_json(v.psi_h)},
              {"reference", to_json(v.reference)},
              {"ratio", to_json(v.ratio)},
              {"violates", v.violates()},
              {"nilpotent", v.nilpotent},
              {"solvable", v.solvable}};
}

inline Json to_json(const GroupScan& g) {
  Json j{{"group", g.name}, {"order", g.order}};
  if (g.error) {
    j["error"] = *g.error;
    return j;
  }
  j["nilpotent"] = g.nilpotent;
  j["solvable"] = g.solvable;
  j["cyclic"] = g.cyclic;
  j["psi"] = to_json(g.psi);
  j["psi_cyclic"] = to_json(g.psi_cyclic_same_order);
  j["violations"] = g.violations();
  Json subs = Json::array();
  for (const auto& v : g.subgroups) subs.push_back(to_json(v));
  j["subgroups"] = std::move(subs);
  return j;
}

inline Json to_json(const ScanSummary& s) {
  return Json{{"groups", s.groups},
              {"subgroup_pairs", s.subgroup_pairs},
              {"violating_pairs", s.violating_pairs},
              {"violating_groups", s.violating_groups},
              {"nilpotent_violations", s.nilpotent_violations},
              {"cyclic_maximum_failures", s.cyclic_maximum_failures},
              {"errors", s.errors}};
}

inline Json to_json(const BoundsReport& b) {
  Json checks = Json::array();
  for (const auto& c : b.checks)
    checks.push_back(Json{{"name", c.name},
                          {"checked", c.checked},
                          {"failed", c.failed},
                          {"asserted", c.asserted},
                          {"failures", c.failures}});
  return Json{{"group", b.group}, {"group_order", b.group_order}, {"subgroups", b.subgroups}, {"checks", checks}};
}

inline Json to_json(const BijectionResult& r) {
  Json j{{"exists", r.exists}};
  if (r.exists) {
    j["witness"] = r.witness;
  } else {
    Json classes = Json::array();
    for (const auto& c : r.hall_violator) classes.push_back(Json{{"relative_order", c.relative_order}, {"count", c.count}});
    j["hall_violator"] = classes;
    j["violator_size"] = r.violator_size;
    j["neighborhood_size"] = r.neighborhood_size;
  }
  return j;
}

inline Json to_json(const MonotonicityRow& row) {
  return Json{{"r", row.r},
              {"ratio", to_json(row.ratio)},
              {"mersenne", row.mersenne},
              {"below_limit", row.below_limit},
              {"above_one", row.above_one},
              {"increasing", row.increasing}};
}

/// {"schema_version", "command", "results", "timing_ms"}; keys are emitted in
/// sorted order so dump(parse(dump(d))) == dump(d).
inline Json make_document(const std::vector<std::string>& command, Json results, long long timing_ms) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"results", std::move(results)},
              {"timing_ms", timing_ms}};
}

inline std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace relorder
