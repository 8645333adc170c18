#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "exbetti/betti.hpp"
#include "exbetti/ideal.hpp"
#include "exbetti/ideal_realizer.hpp"
#include "exbetti/module_realizer.hpp"

namespace exbetti {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to ErrorKind::Parse.
Json parse_json(const std::string& text);
/// Two-space indent plus trailing newline.
std::string dump_json(const Json& doc);

Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& doc);

Json to_json(const MonomialSubmodule& module);
/// Accepts a submodule document or a bare ideal document (rank 1).
MonomialSubmodule module_from_json(const Json& doc);

Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& doc, int n);

struct SpecDocument {
  CornerSpec spec;
  Mode mode = Mode::Coupled;
  std::optional<int> m;
};

Json to_json(const SpecDocument& doc);
SpecDocument spec_from_json(const Json& doc);

Json to_json(const std::vector<Extremal>& extremals);
Json to_json(const BoundReport& report);
Json to_json(const ValueVerdict& verdict);
Json to_json(const PositionVerdict& verdict);
Json to_json(const CornerMatrix& matrix);
Json to_json(const BorelViolation& violation);

}  // namespace exbetti
