#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ontolith/graph.hpp"

namespace ontolith {

// Canonical graph JSON: fixed field order (directed, nodes, edges; id, label,
// type, attributes; source, target, relation, weight), nodes and edges sorted,
// two-space indentation, weights in shortest round-trippable decimal form.
nlohmann::ordered_json graph_to_ordered_json(const Graph& g);

// Pretty canonical form with trailing newline (the on-disk .json format).
std::string graph_to_canonical_json(const Graph& g);

// Single-line canonical form for embedding in JSONL records.
std::string graph_to_compact_json(const Graph& g);

// Accepts any field order; missing label/type default to "", missing
// attributes to {}, missing weight to 1.0. Graph invariant violations
// (duplicates, dangling endpoints, non-finite weights) propagate.
Graph graph_from_json(const nlohmann::json& j);
Graph graph_from_json_text(const std::string& text);

} // namespace ontolith
