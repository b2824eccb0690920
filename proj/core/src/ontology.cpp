#include "ontolith/ontology.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ontolith::onto {

const char* to_string(AxiomKind kind) noexcept {
    switch (kind) {
    case AxiomKind::SubClassOf: return "subClassOf";
    case AxiomKind::EquivalentClass: return "equivalentClass";
    case AxiomKind::DisjointWith: return "disjointWith";
    }
    return "?";
}

std::string to_string(const Axiom& a) {
    return std::string(to_string(a.kind)) + "(" + a.subject + ", " + a.object + ")";
}

void Ontology::add_class(OntClass c) {
    auto [it, inserted] = classes_.try_emplace(c.iri, c);
    if (!inserted) {
        if (it->second.label.empty()) it->second.label = c.label;
        if (it->second.comment.empty()) it->second.comment = c.comment;
    }
}

void Ontology::add_property(OntProperty p) {
    auto [it, inserted] = properties_.try_emplace(p.iri, p);
    if (!inserted) {
        if (it->second.domain.empty()) it->second.domain = p.domain;
        if (it->second.range.empty()) it->second.range = p.range;
        if (it->second.label.empty()) it->second.label = p.label;
        if (it->second.comment.empty()) it->second.comment = p.comment;
        if (p.kind == PropertyKind::Object) it->second.kind = PropertyKind::Object;
    }
}

void Ontology::add_axiom(Axiom a) {
    if (a.kind != AxiomKind::SubClassOf && a.object < a.subject) {
        std::swap(a.subject, a.object);
    }
    axioms_.insert(std::move(a));
}

nlohmann::ordered_json ValidationReport::to_json() const {
    nlohmann::ordered_json j;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json jv;
        jv["kind"] = v.kind;
        jv["axioms"] = v.axioms;
        jv["message"] = v.message;
        j["violations"].push_back(std::move(jv));
    }
    return j;
}

namespace {

bool is_known_datatype(const std::string& iri) {
    return iri.rfind("http://www.w3.org/2001/XMLSchema#", 0) == 0;
}

// Tarjan strongly connected components over the subClassOf digraph.
struct SccFinder {
    const std::map<std::string, std::vector<std::string>>& adj;
    std::map<std::string, int> index, low;
    std::vector<std::string> stack;
    std::set<std::string> on_stack;
    int counter = 0;
    std::vector<std::vector<std::string>> components;

    void run(const std::string& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        auto it = adj.find(v);
        if (it != adj.end()) {
            for (const auto& w : it->second) {
                if (!index.count(w)) {
                    run(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack.count(w)) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::string> comp;
            while (true) {
                std::string w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                comp.push_back(w);
                if (w == v) break;
            }
            components.push_back(std::move(comp));
        }
    }
};

struct UnionFind {
    std::map<std::string, std::string> parent;

    std::string find(const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        std::string root = find(it->second);
        parent[x] = root;
        return root;
    }

    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
};

} // namespace

ValidationReport validate(const Ontology& o) {
    ValidationReport report;

    for (const auto& a : o.axioms()) {
        for (const std::string* end : {&a.subject, &a.object}) {
            if (!o.has_class(*end)) {
                report.violations.push_back(
                    {"dangling-reference",
                     {to_string(a)},
                     "axiom references undeclared class '" + *end + "'"});
            }
        }
    }
    for (const auto& [iri, p] : o.properties()) {
        if (!p.domain.empty() && !o.has_class(p.domain)) {
            report.violations.push_back({"dangling-reference",
                                         {"domain(" + iri + ", " + p.domain + ")"},
                                         "property domain '" + p.domain + "' is not a declared class"});
        }
        if (!p.range.empty() && !o.has_class(p.range) && !is_known_datatype(p.range)) {
            report.violations.push_back(
                {"dangling-reference",
                 {"range(" + iri + ", " + p.range + ")"},
                 "property range '" + p.range + "' is neither a declared class nor a known datatype"});
        }
    }

    // subClassOf cycles: every SCC of size > 1 (or a self-loop) is one
    // violation listing its member axioms.
    std::map<std::string, std::vector<std::string>> up;
    for (const auto& a : o.axioms()) {
        if (a.kind == AxiomKind::SubClassOf) up[a.subject].push_back(a.object);
    }
    SccFinder scc{up};
    for (const auto& [v, targets] : up) {
        if (!scc.index.count(v)) scc.run(v);
    }
    std::vector<std::set<std::string>> cyclic;
    for (auto& comp : scc.components) {
        if (comp.size() > 1) cyclic.emplace_back(comp.begin(), comp.end());
    }
    for (const auto& a : o.axioms()) {
        if (a.kind == AxiomKind::SubClassOf && a.subject == a.object) {
            cyclic.push_back({a.subject});
        }
    }
    std::sort(cyclic.begin(), cyclic.end());
    for (const auto& comp : cyclic) {
        Violation v{"cycle", {}, "subClassOf cycle through " + std::to_string(comp.size()) + " class(es)"};
        for (const auto& a : o.axioms()) {
            if (a.kind != AxiomKind::SubClassOf) continue;
            bool self_loop = comp.size() == 1 && a.subject == a.object && comp.count(a.subject);
            bool in_component = comp.size() > 1 && comp.count(a.subject) && comp.count(a.object);
            if (self_loop || in_component) v.axioms.push_back(to_string(a));
        }
        report.violations.push_back(std::move(v));
    }

    // equivalentClass closure versus disjointWith.
    UnionFind uf;
    for (const auto& a : o.axioms()) {
        if (a.kind == AxiomKind::EquivalentClass) uf.unite(a.subject, a.object);
    }
    for (const auto& a : o.axioms()) {
        if (a.kind != AxiomKind::DisjointWith) continue;
        if (a.subject == a.object || uf.find(a.subject) == uf.find(a.object)) {
            Violation v{"contradiction", {to_string(a)},
                        "classes declared disjoint are equivalent under closure"};
            for (const auto& eq : o.axioms()) {
                if (eq.kind == AxiomKind::EquivalentClass &&
                    uf.find(eq.subject) == uf.find(a.subject)) {
                    v.axioms.push_back(to_string(eq));
                }
            }
            report.violations.push_back(std::move(v));
        }
    }

    return report;
}

std::set<std::string> subclass_closure(const Ontology& o, const std::string& iri) {
    if (!o.has_class(iri)) {
        throw Error(ErrorCode::UnknownClass, "class '" + iri + "' is not declared");
    }
    std::map<std::string, std::vector<std::string>> up;
    for (const auto& a : o.axioms()) {
        if (a.kind == AxiomKind::SubClassOf) up[a.subject].push_back(a.object);
    }
    // Reject cycles reachable from iri, then collect ancestors by BFS.
    std::set<std::string> in_progress, done;
    std::function<void(const std::string&)> dfs = [&](const std::string& u) {
        in_progress.insert(u);
        auto it = up.find(u);
        if (it != up.end()) {
            for (const auto& v : it->second) {
                if (in_progress.count(v)) {
                    throw Error(ErrorCode::CyclicHierarchy,
                                "subClassOf cycle reachable from '" + iri + "' via '" + v + "'");
                }
                if (!done.count(v)) dfs(v);
            }
        }
        in_progress.erase(u);
        done.insert(u);
    };
    dfs(iri);

    std::set<std::string> closure;
    std::deque<std::string> frontier{iri};
    std::set<std::string> seen{iri};
    while (!frontier.empty()) {
        std::string u = frontier.front();
        frontier.pop_front();
        auto it = up.find(u);
        if (it == up.end()) continue;
        for (const auto& v : it->second) {
            if (seen.insert(v).second) {
                closure.insert(v);
                frontier.push_back(v);
            }
        }
    }
    closure.erase(iri);
    return closure;
}

std::string local_name(const std::string& iri) {
    auto pos = iri.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 >= iri.size()) return iri;
    return iri.substr(pos + 1);
}

Graph to_graph(const Ontology& o) {
    // Node ids are local names when unique across classes, full IRIs otherwise.
    std::map<std::string, int> name_counts;
    for (const auto& [iri, c] : o.classes()) ++name_counts[local_name(iri)];
    auto node_id = [&](const std::string& iri) {
        std::string ln = local_name(iri);
        return name_counts[ln] == 1 ? ln : iri;
    };

    std::map<std::string, std::map<std::string, std::string>> data_attrs;
    for (const auto& [iri, p] : o.properties()) {
        if (p.kind == PropertyKind::Data && !p.domain.empty() && o.has_class(p.domain)) {
            data_attrs[node_id(p.domain)][local_name(iri)] =
                p.range.empty() ? "literal" : local_name(p.range);
        }
    }

    GraphBuilder b(true);
    for (const auto& [iri, c] : o.classes()) {
        Node n;
        n.id = node_id(iri);
        n.label = c.label.empty() ? local_name(iri) : c.label;
        n.node_type = "class";
        n.attributes["iri"] = iri;
        if (!c.comment.empty()) n.attributes["comment"] = c.comment;
        auto it = data_attrs.find(n.id);
        if (it != data_attrs.end()) {
            for (const auto& [k, v] : it->second) n.attributes.emplace(k, v);
        }
        b.add_node(std::move(n));
    }
    for (const auto& a : o.axioms()) {
        if (!o.has_class(a.subject) || !o.has_class(a.object)) continue;
        std::string s = node_id(a.subject), t = node_id(a.object);
        if (!b.has_edge(s, t, to_string(a.kind))) {
            b.add_edge({s, t, to_string(a.kind), 1.0});
        }
    }
    for (const auto& [iri, p] : o.properties()) {
        if (p.kind != PropertyKind::Object) continue;
        if (p.domain.empty() || p.range.empty()) continue;
        if (!o.has_class(p.domain) || !o.has_class(p.range)) continue;
        std::string s = node_id(p.domain), t = node_id(p.range);
        if (!b.has_edge(s, t, local_name(iri))) {
            b.add_edge({s, t, local_name(iri), 1.0});
        }
    }
    return std::move(b).build();
}

} // namespace ontolith::onto
