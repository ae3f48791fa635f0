#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sumgraph/labelling.hpp"

namespace sumgraph {

enum class ReportFormat { Dot, Json };

// DOT names vertices by label rendering; JSON carries {n, edges, magma,
// labels}. Pre: labelling, when present, covers all vertices of g.
std::string emit_report(const Graph& g, const std::optional<Labelling>& labelling,
                        ReportFormat format);

// JSON encodings used across the CLI (schema_version 1 throughout)
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json magma_to_json(const MagmaSpec& spec);
MagmaSpec magma_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const MagmaSpec& spec, const Element& e);
Element element_from_json(const MagmaSpec& spec, const nlohmann::json& j);

nlohmann::json labelling_to_json(const Labelling& lab, const std::optional<Graph>& graph = {});
Labelling labelling_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v, const Labelling& lab);

// CLI-facing magma names: "z", "n", "absdiff", "z<m>", "u<m>",
// "z4x4" (products), "set<s>:union" and friends
MagmaSpec parse_magma_name(const std::string& name);

// CLI-facing label lists: "1,3,6,8" / "(1,2),(0,1)" / "{1,3},{2},{}"
std::vector<Element> parse_labels(const MagmaSpec& spec, const std::string& text);

}  // namespace sumgraph
