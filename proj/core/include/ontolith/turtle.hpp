#pragma once

#include <string>

#include "ontolith/ontology.hpp"

namespace ontolith::onto {

// Parses the supported Turtle subset: @prefix/@base, class and property
// declarations, rdfs:label / rdfs:comment, rdfs:subClassOf,
// owl:equivalentClass, owl:disjointWith, rdfs:domain / rdfs:range.
// Triples outside the subset (unknown predicates, language-tagged or typed
// literals, unknown rdf:type objects) round-trip through the passthrough
// store. Blank nodes and collections are not supported.
Ontology parse_turtle(const std::string& text);

// Deterministic canonical form: prefixes sorted, subjects sorted by IRI,
// predicates in fixed order (type, label, comment, subClassOf,
// equivalentClass, disjointWith, domain, range), objects sorted,
// passthrough triples last. Structurally equal ontologies serialize to
// byte-identical documents.
std::string serialize_turtle(const Ontology& o);

} // namespace ontolith::onto
