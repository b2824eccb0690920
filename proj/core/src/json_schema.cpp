#include "ontolith/json_schema.hpp"

namespace ontolith::jsonschema {

using nlohmann::json;

namespace {

const char* type_name(const json& v) {
    switch (v.type()) {
    case json::value_t::object: return "object";
    case json::value_t::array: return "array";
    case json::value_t::string: return "string";
    case json::value_t::boolean: return "boolean";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return "integer";
    case json::value_t::number_float: return "number";
    case json::value_t::null: return "null";
    default: return "unknown";
    }
}

bool matches_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    return false;
}

void check_at(const json& v, const json& schema, const std::string& path,
              std::vector<std::string>& out) {
    if (!schema.is_object()) return;

    if (auto it = schema.find("type"); it != schema.end()) {
        bool ok = false;
        if (it->is_string()) {
            ok = matches_type(v, it->get<std::string>());
        } else if (it->is_array()) {
            for (const auto& t : *it) {
                if (t.is_string() && matches_type(v, t.get<std::string>())) ok = true;
            }
        }
        if (!ok) {
            out.push_back(path + ": expected type " + it->dump() + ", got " + type_name(v));
            return; // further keyword checks would only cascade
        }
    }

    if (auto it = schema.find("enum"); it != schema.end() && it->is_array()) {
        bool found = false;
        for (const auto& candidate : *it) {
            if (candidate == v) found = true;
        }
        if (!found) out.push_back(path + ": value not in enum " + it->dump());
    }

    if (v.is_string()) {
        if (auto it = schema.find("minLength"); it != schema.end() && it->is_number_unsigned()) {
            if (v.get<std::string>().size() < it->get<std::size_t>()) {
                out.push_back(path + ": string shorter than minLength");
            }
        }
    }

    if (v.is_number()) {
        if (auto it = schema.find("minimum"); it != schema.end() && it->is_number()) {
            if (v.get<double>() < it->get<double>()) out.push_back(path + ": below minimum");
        }
        if (auto it = schema.find("maximum"); it != schema.end() && it->is_number()) {
            if (v.get<double>() > it->get<double>()) out.push_back(path + ": above maximum");
        }
    }

    if (v.is_object()) {
        const json* props = nullptr;
        if (auto it = schema.find("properties"); it != schema.end() && it->is_object()) {
            props = &*it;
            for (auto& [name, sub] : it->items()) {
                if (v.contains(name)) check_at(v.at(name), sub, path + "/" + name, out);
            }
        }
        if (auto it = schema.find("required"); it != schema.end() && it->is_array()) {
            for (const auto& name : *it) {
                if (name.is_string() && !v.contains(name.get<std::string>())) {
                    out.push_back(path + ": missing required property '" +
                                  name.get<std::string>() + "'");
                }
            }
        }
        if (auto it = schema.find("additionalProperties");
            it != schema.end() && it->is_boolean() && !it->get<bool>()) {
            for (auto& [name, member] : v.items()) {
                if (!props || !props->contains(name)) {
                    out.push_back(path + ": unexpected property '" + name + "'");
                }
            }
        }
    }

    if (v.is_array()) {
        if (auto it = schema.find("minItems"); it != schema.end() && it->is_number_unsigned()) {
            if (v.size() < it->get<std::size_t>()) out.push_back(path + ": fewer than minItems");
        }
        if (auto it = schema.find("maxItems"); it != schema.end() && it->is_number_unsigned()) {
            if (v.size() > it->get<std::size_t>()) out.push_back(path + ": more than maxItems");
        }
        if (auto it = schema.find("items"); it != schema.end() && it->is_object()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                check_at(v[i], *it, path + "/" + std::to_string(i), out);
            }
        }
    }
}

} // namespace

std::vector<std::string> check(const json& instance, const json& schema) {
    std::vector<std::string> out;
    check_at(instance, schema, "$", out);
    return out;
}

bool valid_schema(const json& schema) {
    if (!schema.is_object()) return false;
    if (auto it = schema.find("type"); it != schema.end()) {
        if (!it->is_string() && !it->is_array()) return false;
    }
    if (auto it = schema.find("properties"); it != schema.end()) {
        if (!it->is_object()) return false;
        for (auto& [name, sub] : it->items()) {
            if (!valid_schema(sub)) return false;
        }
    }
    if (auto it = schema.find("items"); it != schema.end()) {
        if (!valid_schema(*it)) return false;
    }
    return true;
}

} // namespace ontolith::jsonschema
