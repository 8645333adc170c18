#include "exbetti/json_io.hpp"

#include "exbetti/error.hpp"

namespace exbetti {

namespace {

Error parse_error(const std::string& why) { return Error(ErrorKind::Parse, why); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw parse_error("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw parse_error(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) throw parse_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Count count_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw parse_error(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<Count>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return Json{{"n", ideal.num_vars()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const Json& doc) {
  const int n = int_field(doc, "n");
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "n must be positive");
  const Json& gens = field(doc, "generators");
  if (!gens.is_array()) throw parse_error("'generators' must be an array");
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (!g.is_string()) throw parse_error("generators must be strings");
    out.push_back(parse_monomial(g.get<std::string>(), n));
  }
  return MonomialIdeal::minimalize(n, std::move(out));
}

Json to_json(const MonomialSubmodule& module) {
  Json comps = Json::array();
  for (const auto& c : module.components()) comps.push_back(to_json(c));
  return Json{{"n", module.num_vars()}, {"m", module.rank()}, {"shifts", module.shifts()}, {"components", comps}};
}

MonomialSubmodule module_from_json(const Json& doc) {
  if (doc.is_object() && !doc.contains("components")) return MonomialSubmodule::from_ideal(ideal_from_json(doc));
  const int n = int_field(doc, "n");
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "n must be positive");
  const Json& comps = field(doc, "components");
  if (!comps.is_array() || comps.empty()) throw parse_error("'components' must be a non-empty array");
  std::vector<MonomialIdeal> ideals;
  for (const auto& c : comps) {
    auto ideal = ideal_from_json(c);
    if (ideal.num_vars() != n) throw parse_error("component has a different n");
    ideals.push_back(std::move(ideal));
  }
  if (doc.contains("m") && int_field(doc, "m") != static_cast<int>(ideals.size())) {
    throw parse_error("'m' does not match the number of components");
  }
  std::vector<int> shifts;
  if (doc.contains("shifts")) {
    const Json& s = doc.at("shifts");
    if (!s.is_array()) throw parse_error("'shifts' must be an array");
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw parse_error("shifts must be integers");
      shifts.push_back(v.get<int>());
    }
  }
  return MonomialSubmodule(n, std::move(ideals), std::move(shifts));
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, beta] : table.entries()) {
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", beta}});
  }
  return Json{{"entries", entries}};
}

BettiTable betti_from_json(const Json& doc, int n) {
  BettiTable table(n);
  const Json& entries = field(doc, "entries");
  if (!entries.is_array()) throw parse_error("'entries' must be an array");
  for (const auto& e : entries) table.add(int_field(e, "i"), int_field(e, "j"), count_field(e, "beta"));
  return table;
}

Json to_json(const SpecDocument& doc) {
  Json corners = Json::array();
  for (int i = 0; i < doc.spec.size(); ++i) {
    corners.push_back(Json{{"k", doc.spec.corner(i).k}, {"l", doc.spec.corner(i).l}, {"a", doc.spec.value(i)}});
  }
  Json out{{"n", doc.spec.n}, {"corners", corners}, {"mode", std::string(to_string(doc.mode))}};
  if (doc.m) out["m"] = *doc.m;
  return out;
}

SpecDocument spec_from_json(const Json& doc) {
  SpecDocument out;
  out.spec.n = int_field(doc, "n");
  const Json& corners = field(doc, "corners");
  if (!corners.is_array()) throw parse_error("'corners' must be an array");
  for (const auto& c : corners) {
    out.spec.corners.push_back({int_field(c, "k"), int_field(c, "l")});
    out.spec.values.push_back(count_field(c, "a"));
  }
  if (doc.contains("mode")) {
    if (!doc.at("mode").is_string()) throw parse_error("'mode' must be a string");
    out.mode = parse_mode(doc.at("mode").get<std::string>());
  }
  if (doc.contains("m")) out.m = int_field(doc, "m");
  out.spec.validate();
  return out;
}

Json to_json(const std::vector<Extremal>& extremals) {
  Json out = Json::array();
  for (const auto& e : extremals) {
    out.push_back(Json{{"k", e.corner.k}, {"l", e.corner.l}, {"beta", e.value}});
  }
  return out;
}

Json to_json(const BoundReport& report) {
  Json corners = Json::array();
  for (const auto& c : report.corners) {
    Json members = Json::array();
    for (const auto& u : c.members) members.push_back(u.to_string());
    Json subtracted = nullptr;
    if (!c.subtracted.is_empty()) {
      subtracted = Json{{"top", c.subtracted.top().to_string()}, {"bottom", c.subtracted.bottom().to_string()}};
    }
    corners.push_back(Json{{"k", c.corner.k},
                           {"l", c.corner.l},
                           {"branch", std::string(to_string(c.branch))},
                           {"bottom", c.bottom.to_string()},
                           {"members", members},
                           {"subtracted", subtracted},
                           {"bound", c.admissible}});
  }
  return Json{{"t", report.t}, {"corners", corners}};
}

Json to_json(const ValueVerdict& verdict) {
  Json picks = Json::array();
  for (const auto& p : verdict.picks) picks.push_back(p.to_string());
  Json out{{"mode", std::string(to_string(verdict.mode))}, {"feasible", verdict.feasible}, {"bounds", verdict.bounds}};
  out["failing_corner"] = verdict.failing ? Json(*verdict.failing + 1) : Json(nullptr);
  out["picks"] = picks;
  return out;
}

Json to_json(const PositionVerdict& verdict) {
  const char* status = verdict.status == PositionStatus::Admissible ? "admissible"
                       : verdict.status == PositionStatus::Rejected ? "rejected"
                                                                    : "uncovered";
  return Json{{"status", status}, {"reason", verdict.reason}};
}

Json to_json(const CornerMatrix& matrix) { return Json(matrix.rows); }

Json to_json(const BorelViolation& v) {
  return Json{{"u", v.generator.to_string()}, {"i", v.i}, {"j", v.j}, {"image", v.image.to_string()}};
}

}  // namespace exbetti
