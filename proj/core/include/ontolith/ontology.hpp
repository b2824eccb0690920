#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontolith/errors.hpp"
#include "ontolith/graph.hpp"

namespace ontolith::onto {

enum class PropertyKind { Object, Data };
enum class AxiomKind { SubClassOf, EquivalentClass, DisjointWith };

const char* to_string(AxiomKind kind) noexcept;

struct OntClass {
    std::string iri;
    std::string label;
    std::string comment;

    friend bool operator==(const OntClass&, const OntClass&) = default;
};

struct OntProperty {
    std::string iri;
    PropertyKind kind = PropertyKind::Data;
    std::string domain;  // empty = unset
    std::string range;   // empty = unset; class IRI or datatype IRI
    std::string label;
    std::string comment;

    friend bool operator==(const OntProperty&, const OntProperty&) = default;
};

struct Axiom {
    AxiomKind kind;
    std::string subject;
    std::string object;

    friend auto operator<=>(const Axiom&, const Axiom&) = default;
};

// Renders an axiom for reports and provenance keys, e.g.
// "subClassOf(http://x#A, http://x#B)".
std::string to_string(const Axiom& a);

// Triple outside the supported subset, preserved verbatim across round trips.
// subject and predicate are full IRIs; object is a rendered Turtle token
// (an <IRI> or a literal, possibly with a language tag or datatype).
struct PassthroughTriple {
    std::string subject;
    std::string predicate;
    std::string object;

    friend auto operator<=>(const PassthroughTriple&, const PassthroughTriple&) = default;
};

// OWL-lite ontology: classes, properties, and subclass / equivalence /
// disjointness axioms. Immutable by convention after construction; the
// validator treats invariants (acyclicity, resolution) as data to check,
// not preconditions.
class Ontology {
public:
    const std::string& base_iri() const { return base_iri_; }
    void set_base_iri(std::string iri) { base_iri_ = std::move(iri); }

    const std::map<std::string, OntClass>& classes() const { return classes_; }
    const std::map<std::string, OntProperty>& properties() const { return properties_; }
    const std::set<Axiom>& axioms() const { return axioms_; }
    const std::set<PassthroughTriple>& passthrough() const { return passthrough_; }
    const std::map<std::string, std::string>& provenance() const { return provenance_; }

    bool has_class(const std::string& iri) const { return classes_.count(iri) != 0; }
    bool has_property(const std::string& iri) const { return properties_.count(iri) != 0; }

    // Inserts or merges; non-empty label/comment win over empty ones.
    void add_class(OntClass c);
    void add_property(OntProperty p);
    // Equivalence and disjointness axioms are normalized to lexicographic
    // (subject, object) order so the symmetric closure has one spelling.
    void add_axiom(Axiom a);
    void add_passthrough(PassthroughTriple t) { passthrough_.insert(std::move(t)); }

    void set_provenance(const std::string& key, const std::string& tag) { provenance_[key] = tag; }

    // Structural equality; provenance is reviewer metadata and excluded.
    friend bool operator==(const Ontology& a, const Ontology& b) {
        return a.base_iri_ == b.base_iri_ && a.classes_ == b.classes_ &&
               a.properties_ == b.properties_ && a.axioms_ == b.axioms_ &&
               a.passthrough_ == b.passthrough_;
    }

private:
    std::string base_iri_;
    std::map<std::string, OntClass> classes_;
    std::map<std::string, OntProperty> properties_;
    std::set<Axiom> axioms_;
    std::set<PassthroughTriple> passthrough_;
    std::map<std::string, std::string> provenance_;
};

struct Violation {
    std::string kind; // "cycle" | "dangling-reference" | "contradiction"
    std::vector<std::string> axioms;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    nlohmann::ordered_json to_json() const;
};

// Checks subClassOf acyclicity, reference resolution, and
// equivalence-versus-disjointness contradictions. Violations are data.
ValidationReport validate(const Ontology& o);

// Transitive superclass set of `iri`, excluding `iri` itself.
std::set<std::string> subclass_closure(const Ontology& o, const std::string& iri);

// Projects the ontology onto the property-graph model: classes become nodes,
// subclass/equivalence/disjointness axioms and object properties become
// typed edges, data properties become node attributes on their domain.
Graph to_graph(const Ontology& o);

// Fragment after the last '#' or '/'.
std::string local_name(const std::string& iri);

} // namespace ontolith::onto
