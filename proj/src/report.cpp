#include "gk/report.hpp"

namespace gk {

Json to_json(const Cycle& c) { return c.vertices; }

Json to_json(const MembershipReport& r) {
  Json j;
  j["connected"] = r.connected;
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  j["second_neighborhood"] = r.second_neighborhood;
  j["verdict"] = r.member ? "in" : "out";
  if (!r.member) j["reason"] = r.reason;
  j["violating_vertex"] = r.violating_vertex ? Json(*r.violating_vertex) : Json(nullptr);
  j["ball_cut"] = r.ball_cut ? Json{{"center", r.ball_cut->center}, {"cut", r.ball_cut->cut}} : Json(nullptr);
  return j;
}

Json to_json(const MembershipPredicates& p) {
  return Json{{"second_neighborhood_bound", p.second_neighborhood_bound},
              {"ball_size_bound", p.ball_size_bound},
              {"degree_sum_bound", p.degree_sum_bound},
              {"common_neighbor_bound", p.common_neighbor_bound},
              {"all_equal", p.all_equal()}};
}

Json to_json(const CanonicalForm& f) {
  Json j;
  j["variant"] = to_string(f.variant);
  j["k"] = f.k;
  j["n"] = f.n();
  j["hinges"] = f.hinges;
  j["segments"] = Json::array();
  for (const auto& s : f.segments)
    j["segments"].push_back({{"kind", to_string(s.kind)}, {"entry", s.entry}, {"exit", s.exit}, {"slots", s.slots}});
  j["canonical"] = f.canonical_tags();
  return j;
}

Json to_json(const HamCertificate& c) {
  Json j;
  j["cycle"] = to_json(c.cycle);
  j["provenance"] = to_string(c.provenance);
  if (c.form) j["form"] = to_json(*c.form);
  if (c.provenance == Provenance::oracle) j["oracle_nodes"] = c.oracle_nodes;
  return j;
}

Json to_json(const ExtensionStep& s) {
  Json j;
  j["before"] = to_json(s.before);
  j["after"] = to_json(s.after);
  j["delta"] = s.delta;
  j["pattern"] = s.pattern;
  j["attachment"] = s.attachment ? Json{{"w1", (*s.attachment)[0]}, {"v", (*s.attachment)[1]}, {"z", (*s.attachment)[2]}}
                                 : Json(nullptr);
  return j;
}

Json to_json(const HamiltonizeResult& r) {
  Json j;
  j["cycle"] = to_json(r.cycle);
  j["steps"] = Json::array();
  std::vector<std::size_t> deltas;
  for (const auto& s : r.steps) {
    // The trace keeps only what a reader needs to replay it.
    j["steps"].push_back({{"delta", s.delta}, {"pattern", s.pattern}, {"after", to_json(s.after)}});
    deltas.push_back(s.delta);
  }
  j["deltas"] = deltas;
  j["pattern_hits"] = r.pattern_hits;
  return j;
}

std::string_view to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::found:
      return "found";
    case OracleOutcome::not_hamiltonian:
      return "not-hamiltonian";
    case OracleOutcome::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

Json to_json(const OracleResult& r) {
  Json j;
  j["outcome"] = to_string(r.outcome);
  j["cycle"] = r.cycle ? to_json(*r.cycle) : Json(nullptr);
  j["nodes"] = r.nodes;
  j["budget"] = r.budget;
  return j;
}

Json to_json(const IsomorphismResult& r) {
  return Json{{"isomorphic", r.isomorphic}, {"mapping", r.isomorphic ? Json(r.mapping) : Json(nullptr)}};
}

Json to_json(const Layout& l) {
  Json j = Json::array();
  for (const auto& [name, ids] : l.sets) j.push_back({{"name", name}, {"ids", ids}});
  return j;
}

Json to_json(const ValidationReport& r) {
  return Json{{"ok", r.ok()}, {"checked", r.checked}, {"failures", r.failures}};
}

Cycle cycle_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, "malformed cycle JSON");
  }
  if (j.is_object() && j.contains("cycle")) j = j["cycle"];
  if (!j.is_array()) throw_input("cycle JSON must be an array or an object with a \"cycle\" array");
  Cycle c;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw_input("cycle entries must be nonnegative integers");
    c.vertices.push_back(v.get<Vertex>());
  }
  return c;
}

}  // namespace gk
