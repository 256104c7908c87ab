#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "strongcover/coloring.hpp"
#include "strongcover/covers.hpp"

namespace strongcover::io {

using nlohmann::json;

/// Malformed JSON or a document that does not match the expected schema.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

json to_json(const MultiColoring& col);
json to_json(const TIntervalFamily& fam);
json to_json(const TSubtreeFamily& fam);
json to_json(const StrongCover& cover);
json to_json(const covers::GreedyTrace& trace);
json to_json(const std::vector<PiercingPoint>& points);

MultiColoring coloring_from_json(const json& j);
TIntervalFamily interval_family_from_json(const json& j);
TSubtreeFamily subtree_family_from_json(const json& j);
StrongCover cover_from_json(const json& j);

using Instance = std::variant<MultiColoring, TIntervalFamily, TSubtreeFamily>;

/// Detects the document kind: "edges" -> coloring, "host_edges" -> subtree
/// family, "members" -> interval family.
Instance instance_from_json(const json& j);
json to_json(const Instance& instance);
MultiColoring instance_coloring(const Instance& instance);
std::string instance_kind(const Instance& instance);

json parse(const std::string& text);

}  // namespace strongcover::io
