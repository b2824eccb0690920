#pragma once

// Seeded random ontologies for round-trip and validator suites. Subclass
// axioms always point from a higher index to a lower one, so the generated
// hierarchy is a DAG by construction.

#include <string>
#include <vector>

#include "ontolith/ontology.hpp"
#include "ontolith/random.hpp"

namespace ontolith::testing {

inline const std::string kOntBase = "http://example.org/ont#";

struct RandomOntologyOptions {
    std::size_t min_classes = 2;
    std::size_t max_classes = 50;
    double subclass_prob = 0.12;
    double equivalence_prob = 0.05;
    double disjoint_prob = 0.05;
    double property_prob = 0.4;
    double passthrough_prob = 0.15;
};

inline onto::Ontology random_ontology(Rng& rng, const RandomOntologyOptions& opt = {}) {
    using namespace onto;
    static const std::vector<std::string> kWords = {
        "vehicle", "order",  "invoice", "asset",   "employee", "shipment",
        "region",  "policy", "ledger",  "product", "warehouse"};
    static const std::vector<std::string> kDatatypes = {
        "http://www.w3.org/2001/XMLSchema#string",
        "http://www.w3.org/2001/XMLSchema#integer",
        "http://www.w3.org/2001/XMLSchema#dateTime"};

    Ontology o;
    o.set_base_iri(kOntBase);
    const std::size_t n =
        opt.min_classes + static_cast<std::size_t>(rng.below(opt.max_classes - opt.min_classes + 1));
    std::vector<std::string> iris;
    for (std::size_t i = 0; i < n; ++i) {
        std::string iri = kOntBase + "C" + std::to_string(i);
        OntClass c{iri, "", ""};
        if (rng.chance(0.8)) c.label = kWords[rng.below(kWords.size())] + " " + std::to_string(i);
        if (rng.chance(0.3)) c.comment = "Covers \"" + kWords[rng.below(kWords.size())] + "\"\nuse.";
        o.add_class(c);
        iris.push_back(iri);
    }
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (rng.chance(opt.subclass_prob)) {
                o.add_axiom({AxiomKind::SubClassOf, iris[j], iris[i]});
            }
        }
    }
    // Equivalences among even indices, disjointness between even and odd:
    // never contradictory by construction.
    for (std::size_t i = 0; i + 2 < n; i += 2) {
        if (rng.chance(opt.equivalence_prob)) {
            o.add_axiom({AxiomKind::EquivalentClass, iris[i], iris[i + 2]});
        }
    }
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        if (rng.chance(opt.disjoint_prob)) {
            o.add_axiom({AxiomKind::DisjointWith, iris[i], iris[i + 1]});
        }
    }
    const std::size_t n_props = static_cast<std::size_t>(static_cast<double>(n) * opt.property_prob);
    for (std::size_t i = 0; i < n_props; ++i) {
        OntProperty p;
        p.iri = kOntBase + "p" + std::to_string(i);
        p.kind = rng.chance(0.5) ? PropertyKind::Object : PropertyKind::Data;
        if (rng.chance(0.8)) p.domain = iris[rng.below(n)];
        if (rng.chance(0.8)) {
            p.range = p.kind == PropertyKind::Object ? iris[rng.below(n)]
                                                     : kDatatypes[rng.below(kDatatypes.size())];
        }
        if (rng.chance(0.4)) p.label = kWords[rng.below(kWords.size())];
        o.add_property(p);
    }
    if (rng.chance(opt.passthrough_prob)) {
        o.add_passthrough({iris[rng.below(n)], "http://example.org/meta#note",
                           "\"generated fixture\""});
    }
    return o;
}

} // namespace ontolith::testing
