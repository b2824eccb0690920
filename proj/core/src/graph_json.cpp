#include "ontolith/graph_json.hpp"

namespace ontolith {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_ordered_json(const Graph& g) {
    ordered_json j;
    j["directed"] = g.directed();
    ordered_json nodes = ordered_json::array();
    for (const auto& [id, n] : g.nodes()) {
        ordered_json jn;
        jn["id"] = n.id;
        jn["label"] = n.label;
        jn["type"] = n.node_type;
        ordered_json attrs = ordered_json::object();
        for (const auto& [k, v] : n.attributes) attrs[k] = v;
        jn["attributes"] = std::move(attrs);
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    ordered_json edges = ordered_json::array();
    for (const auto& [k, w] : g.edges()) {
        ordered_json je;
        je["source"] = k.source;
        je["target"] = k.target;
        je["relation"] = k.relation;
        je["weight"] = w;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j;
}

std::string graph_to_canonical_json(const Graph& g) {
    return graph_to_ordered_json(g).dump(2) + "\n";
}

std::string graph_to_compact_json(const Graph& g) {
    return graph_to_ordered_json(g).dump();
}

namespace {

std::string require_string(const json& j, const char* field, const char* where) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_string()) {
        throw Error(ErrorCode::JsonParseError,
                    std::string("expected string field '") + field + "' in " + where);
    }
    return it->get<std::string>();
}

} // namespace

Graph graph_from_json(const json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::JsonParseError, "graph document must be a JSON object");
    }
    bool directed = true;
    if (auto it = j.find("directed"); it != j.end()) {
        if (!it->is_boolean()) {
            throw Error(ErrorCode::JsonParseError, "'directed' must be a boolean");
        }
        directed = it->get<bool>();
    }
    GraphBuilder b(directed);
    if (auto it = j.find("nodes"); it != j.end()) {
        if (!it->is_array()) throw Error(ErrorCode::JsonParseError, "'nodes' must be an array");
        for (const auto& jn : *it) {
            Node n;
            n.id = require_string(jn, "id", "node");
            n.label = jn.value("label", std::string());
            n.node_type = jn.value("type", std::string());
            if (auto a = jn.find("attributes"); a != jn.end()) {
                if (!a->is_object()) {
                    throw Error(ErrorCode::JsonParseError, "node 'attributes' must be an object");
                }
                for (auto& [k, v] : a->items()) {
                    if (!v.is_string()) {
                        throw Error(ErrorCode::JsonParseError,
                                    "attribute '" + k + "' must be a string");
                    }
                    n.attributes[k] = v.get<std::string>();
                }
            }
            b.add_node(std::move(n));
        }
    }
    if (auto it = j.find("edges"); it != j.end()) {
        if (!it->is_array()) throw Error(ErrorCode::JsonParseError, "'edges' must be an array");
        for (const auto& je : *it) {
            Edge e;
            e.source = require_string(je, "source", "edge");
            e.target = require_string(je, "target", "edge");
            e.relation = je.value("relation", std::string());
            if (auto w = je.find("weight"); w != je.end()) {
                if (!w->is_number()) {
                    throw Error(ErrorCode::JsonParseError, "edge 'weight' must be a number");
                }
                e.weight = w->get<double>();
            }
            b.add_edge(std::move(e));
        }
    }
    return std::move(b).build();
}

Graph graph_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw Error(ErrorCode::JsonParseError, "invalid JSON");
    }
    return graph_from_json(j);
}

} // namespace ontolith
