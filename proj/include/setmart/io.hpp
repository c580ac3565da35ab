#pragma once

#include <string>

#include <json.hpp>

#include "setmart/integral.hpp"
#include "setmart/process.hpp"
#include "setmart/represent.hpp"

namespace setmart::io {

using Json = nlohmann::ordered_json;

Json to_json(const ScenarioTree& tree);
ScenarioTree tree_from_json(const Json& j);

Json to_json(const ConvexBody& body);
ConvexBody body_from_json(const Json& j);

Json to_json(const SetRV& rv);
SetRV setrv_from_json(const Json& j);

Json to_json(const PointProcess& p);
PointProcess point_process_from_json(const Json& j, int depth);

/// {"tree": {...}, "dim": d, "levels": [SetRV, ...], "castaing": [...]?}
Json to_json(const SetProcess& f);
SetProcess set_process_from_json(const Json& j);

/// [{"x": [...], "phi": {"(t,j)": [...], ...}}, ...]
Json to_json(const IntegrandFamily& g);
IntegrandFamily family_from_json(const Json& j, int depth);

Json to_json(const ClassifyReport& r);
Json to_json(const HypothesisReport& r);

/// Parses text, mapping syntax and schema errors to ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace setmart::io
