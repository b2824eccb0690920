#include <gtest/gtest.h>

#include <queue>

#include "ontolith/ontology.hpp"
#include "ontolith/turtle.hpp"
#include "support/random_ontologies.hpp"

using namespace ontolith;
using namespace ontolith::onto;

namespace {

const std::string kPrefixHeader =
    "@prefix : <http://example.org/ont#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";

std::string iri(const std::string& local) { return ontolith::testing::kOntBase + local; }

// Boolean transitive-closure oracle over the subClassOf digraph.
std::set<std::string> closure_oracle(const Ontology& o, const std::string& start) {
    std::vector<std::string> ids;
    for (const auto& [i, c] : o.classes()) ids.push_back(i);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    const std::size_t n = ids.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& a : o.axioms()) {
        if (a.kind == AxiomKind::SubClassOf) reach[index.at(a.subject)][index.at(a.object)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (reach[k][j]) reach[i][j] = true;
            }
        }
    }
    std::set<std::string> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (reach[index.at(start)][j] && ids[j] != start) out.insert(ids[j]);
    }
    return out;
}

// Kahn's algorithm as an independent acyclicity oracle.
bool topo_sortable(const Ontology& o) {
    std::map<std::string, int> indeg;
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [i, c] : o.classes()) indeg[i] = 0;
    for (const auto& a : o.axioms()) {
        if (a.kind != AxiomKind::SubClassOf) continue;
        out[a.subject].push_back(a.object);
        ++indeg[a.object];
    }
    std::queue<std::string> q;
    for (const auto& [id, d] : indeg) {
        if (d == 0) q.push(id);
    }
    std::size_t placed = 0;
    while (!q.empty()) {
        std::string u = q.front();
        q.pop();
        ++placed;
        for (const auto& v : out[u]) {
            if (--indeg[v] == 0) q.push(v);
        }
    }
    return placed == indeg.size();
}

} // namespace

TEST(TurtleParse, SingleSubclassTriple) {
    Ontology o = parse_turtle(kPrefixHeader + ":B rdfs:subClassOf :A .\n");
    EXPECT_EQ(o.classes().size(), 2u);
    ASSERT_EQ(o.axioms().size(), 1u);
    const Axiom& a = *o.axioms().begin();
    EXPECT_EQ(a.kind, AxiomKind::SubClassOf);
    EXPECT_EQ(a.subject, iri("B"));
    EXPECT_EQ(a.object, iri("A"));
}

TEST(TurtleParse, PrefixesOnlyIsEmpty) {
    Ontology o = parse_turtle(kPrefixHeader);
    EXPECT_TRUE(o.classes().empty());
    EXPECT_TRUE(o.axioms().empty());
    EXPECT_EQ(o.base_iri(), "http://example.org/ont#");
}

TEST(TurtleParse, DeclarationsAndLiterals) {
    Ontology o = parse_turtle(kPrefixHeader +
                              "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
                              ":Vehicle a owl:Class ;\n"
                              "    rdfs:label \"Vehicle \\\"v\\\"\" ;\n"
                              "    rdfs:comment \"Rolling\\nstock\" .\n"
                              ":speed a owl:DatatypeProperty ;\n"
                              "    rdfs:domain :Vehicle ;\n"
                              "    rdfs:range xsd:integer .\n");
    ASSERT_TRUE(o.has_class(iri("Vehicle")));
    EXPECT_EQ(o.classes().at(iri("Vehicle")).label, "Vehicle \"v\"");
    EXPECT_EQ(o.classes().at(iri("Vehicle")).comment, "Rolling\nstock");
    ASSERT_TRUE(o.has_property(iri("speed")));
    const OntProperty& p = o.properties().at(iri("speed"));
    EXPECT_EQ(p.kind, PropertyKind::Data);
    EXPECT_EQ(p.domain, iri("Vehicle"));
    EXPECT_EQ(p.range, "http://www.w3.org/2001/XMLSchema#integer");
}

TEST(TurtleParse, UnsupportedTriplesPassThrough) {
    Ontology o = parse_turtle(kPrefixHeader +
                              ":A a owl:Class .\n"
                              ":A <http://example.org/meta#note> \"hand written\"@en .\n"
                              ":A rdfs:label 42 .\n");
    EXPECT_EQ(o.passthrough().size(), 2u);
    Ontology back = parse_turtle(serialize_turtle(o));
    EXPECT_EQ(back, o);
}

TEST(TurtleParse, SyntaxErrorHasPosition) {
    try {
        parse_turtle(kPrefixHeader + ":A rdfs:subClassOf .\n");
        FAIL() << "expected SyntaxError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(TurtleParse, UnresolvedPrefix) {
    try {
        parse_turtle(":A rdfs:subClassOf :B .\n");
        FAIL() << "expected UnresolvedPrefix";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnresolvedPrefix);
    }
}

TEST(TurtleRoundTrip, ThirtyTripleFixture) {
    std::string doc = kPrefixHeader +
                      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
                      ":Party a owl:Class ; rdfs:label \"Party\" .\n"
                      ":Customer a owl:Class ; rdfs:label \"Customer\" ; rdfs:subClassOf :Party .\n"
                      ":Supplier a owl:Class ; rdfs:subClassOf :Party ; owl:disjointWith :Customer .\n"
                      ":Person a owl:Class ; owl:equivalentClass :Party .\n"
                      ":Order a owl:Class ; rdfs:comment \"A purchase order\" .\n"
                      ":Item a owl:Class .\n"
                      ":LineItem a owl:Class ; rdfs:subClassOf :Item, :Order .\n"
                      ":name a owl:DatatypeProperty ; rdfs:domain :Party ; rdfs:range xsd:string .\n"
                      ":total a owl:DatatypeProperty ; rdfs:domain :Order ; rdfs:range xsd:integer .\n"
                      ":placed_by a owl:ObjectProperty ; rdfs:domain :Order ; rdfs:range :Customer .\n"
                      ":contains a owl:ObjectProperty ; rdfs:domain :Order ; rdfs:range :Item ;\n"
                      "    rdfs:label \"contains\" .\n"
                      ":Order <http://example.org/meta#reviewed> \"yes\" .\n";
    Ontology first = parse_turtle(doc);
    Ontology second = parse_turtle(serialize_turtle(first));
    EXPECT_EQ(second, first);
}

TEST(TurtleRoundTrip, RandomOntologies) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed);
        Ontology o = ontolith::testing::random_ontology(rng);
        std::string text = serialize_turtle(o);
        Ontology back = parse_turtle(text);
        ASSERT_EQ(back, o) << "seed " << seed << "\n" << text;
    }
}

TEST(TurtleSerialize, CanonicalBytes) {
    // The same structure assembled in two different orders serializes
    // byte-identically.
    Ontology a;
    a.set_base_iri(ontolith::testing::kOntBase);
    a.add_class({iri("B"), "b", ""});
    a.add_class({iri("A"), "a", ""});
    a.add_axiom({AxiomKind::SubClassOf, iri("B"), iri("A")});

    Ontology b;
    b.set_base_iri(ontolith::testing::kOntBase);
    b.add_axiom({AxiomKind::SubClassOf, iri("B"), iri("A")});
    b.add_class({iri("A"), "a", ""});
    b.add_class({iri("B"), "b", ""});

    EXPECT_EQ(serialize_turtle(a), serialize_turtle(b));
    EXPECT_EQ(serialize_turtle(a), serialize_turtle(a));
}

TEST(TurtleSerialize, EquivalenceNormalizedSymmetric) {
    Ontology a;
    a.set_base_iri(ontolith::testing::kOntBase);
    a.add_class({iri("A"), "", ""});
    a.add_class({iri("B"), "", ""});
    a.add_axiom({AxiomKind::EquivalentClass, iri("B"), iri("A")});
    Ontology b = a;
    // Same axiom in the other direction is the same axiom.
    b.add_axiom({AxiomKind::EquivalentClass, iri("A"), iri("B")});
    EXPECT_EQ(a, b);
    EXPECT_EQ(serialize_turtle(a), serialize_turtle(b));
}

TEST(Validate, MinimalCycleListsBothAxioms) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_class({iri("B"), "", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("A"), iri("B")});
    o.add_axiom({AxiomKind::SubClassOf, iri("B"), iri("A")});
    ValidationReport report = validate(o);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].kind, "cycle");
    EXPECT_EQ(report.violations[0].axioms.size(), 2u);
}

TEST(Validate, ConsistentHierarchyIsClean) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_class({iri("B"), "", ""});
    o.add_class({iri("C"), "", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("C"), iri("B")});
    o.add_axiom({AxiomKind::SubClassOf, iri("B"), iri("A")});
    EXPECT_TRUE(validate(o).ok());
}

TEST(Validate, DanglingReference) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("A"), iri("Ghost")});
    ValidationReport report = validate(o);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].kind, "dangling-reference");
}

TEST(Validate, EquivalentAndDisjointContradiction) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_class({iri("B"), "", ""});
    o.add_class({iri("C"), "", ""});
    o.add_axiom({AxiomKind::EquivalentClass, iri("A"), iri("B")});
    o.add_axiom({AxiomKind::EquivalentClass, iri("B"), iri("C")});
    o.add_axiom({AxiomKind::DisjointWith, iri("A"), iri("C")});
    ValidationReport report = validate(o);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].kind, "contradiction");
    EXPECT_EQ(report.violations[0].axioms.size(), 3u);
}

TEST(Validate, InjectedCyclesDetected) {
    int detected = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        ontolith::testing::RandomOntologyOptions opt;
        opt.min_classes = 6;
        opt.max_classes = 30;
        opt.subclass_prob = 0.2;
        opt.equivalence_prob = 0;
        opt.disjoint_prob = 0;
        opt.property_prob = 0;
        opt.passthrough_prob = 0;
        Ontology o = ontolith::testing::random_ontology(rng, opt);
        ASSERT_TRUE(validate(o).ok()) << "false positive at seed " << seed;

        // Inject one back-edge closing an existing chain.
        std::vector<Axiom> subclass;
        for (const auto& a : o.axioms()) {
            if (a.kind == AxiomKind::SubClassOf) subclass.push_back(a);
        }
        if (subclass.empty()) {
            o.add_axiom({AxiomKind::SubClassOf, iri("C0"), iri("C1")});
            subclass.push_back({AxiomKind::SubClassOf, iri("C0"), iri("C1")});
        }
        const Axiom& chain = subclass[rng.below(subclass.size())];
        std::set<std::string> up = subclass_closure(o, chain.subject);
        ASSERT_FALSE(up.empty());
        std::string top = *std::next(up.begin(), static_cast<long>(rng.below(up.size())));
        Axiom injected{AxiomKind::SubClassOf, top, chain.subject};
        o.add_axiom(injected);

        ValidationReport report = validate(o);
        ASSERT_EQ(report.violations.size(), 1u) << "seed " << seed;
        EXPECT_EQ(report.violations[0].kind, "cycle");
        bool mentions_injected = false;
        for (const auto& ax : report.violations[0].axioms) {
            if (ax == to_string(injected)) mentions_injected = true;
        }
        EXPECT_TRUE(mentions_injected) << "seed " << seed;
        ++detected;
    }
    EXPECT_EQ(detected, 100);
}

TEST(Validate, CleanImpliesTopoSortable) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        Rng rng(seed);
        Ontology o = ontolith::testing::random_ontology(rng);
        if (validate(o).ok()) {
            EXPECT_TRUE(topo_sortable(o)) << "seed " << seed;
        }
    }
}

TEST(SubclassClosure, ChainAndRoot) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_class({iri("B"), "", ""});
    o.add_class({iri("C"), "", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("A"), iri("B")});
    o.add_axiom({AxiomKind::SubClassOf, iri("B"), iri("C")});
    EXPECT_EQ(subclass_closure(o, iri("A")), (std::set<std::string>{iri("B"), iri("C")}));
    EXPECT_TRUE(subclass_closure(o, iri("C")).empty());
}

TEST(SubclassClosure, MatchesMatrixOracle) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        ontolith::testing::RandomOntologyOptions opt;
        opt.min_classes = 30;
        opt.max_classes = 30;
        opt.subclass_prob = 0.15;
        opt.equivalence_prob = 0;
        opt.disjoint_prob = 0;
        opt.property_prob = 0;
        opt.passthrough_prob = 0;
        Ontology o = ontolith::testing::random_ontology(rng, opt);
        for (const auto& [iri_, c] : o.classes()) {
            ASSERT_EQ(subclass_closure(o, iri_), closure_oracle(o, iri_)) << "seed " << seed;
        }
    }
}

TEST(SubclassClosure, Errors) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_class({iri("B"), "", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("A"), iri("B")});
    o.add_axiom({AxiomKind::SubClassOf, iri("B"), iri("A")});
    try {
        subclass_closure(o, iri("A"));
        FAIL() << "expected CyclicHierarchy";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CyclicHierarchy);
    }
    try {
        subclass_closure(o, iri("Nope"));
        FAIL() << "expected UnknownClass";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownClass);
    }
}

TEST(ValidationReportJson, Shape) {
    Ontology o;
    o.add_class({iri("A"), "", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("A"), iri("A")});
    auto j = validate(o).to_json();
    ASSERT_TRUE(j.contains("violations"));
    ASSERT_EQ(j["violations"].size(), 1u);
    EXPECT_EQ(j["violations"][0]["kind"], "cycle");
    EXPECT_TRUE(j["violations"][0].contains("axioms"));
    EXPECT_TRUE(j["violations"][0].contains("message"));
}

TEST(OntologyToGraph, ProjectsClassesAxiomsAndProperties) {
    Ontology o;
    o.set_base_iri(ontolith::testing::kOntBase);
    o.add_class({iri("Order"), "Order", ""});
    o.add_class({iri("Customer"), "Customer", ""});
    o.add_class({iri("Party"), "Party", ""});
    o.add_axiom({AxiomKind::SubClassOf, iri("Customer"), iri("Party")});
    o.add_property({iri("placed_by"), PropertyKind::Object, iri("Order"), iri("Customer"), "", ""});
    o.add_property({iri("total"), PropertyKind::Data, iri("Order"),
                    "http://www.w3.org/2001/XMLSchema#integer", "", ""});
    Graph g = to_graph(o);
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_TRUE(g.has_edge("Customer", "Party", "subClassOf"));
    EXPECT_TRUE(g.has_edge("Order", "Customer", "placed_by"));
    EXPECT_EQ(g.node("Order").attributes.at("total"), "integer");
    EXPECT_EQ(g.node("Order").node_type, "class");
}
