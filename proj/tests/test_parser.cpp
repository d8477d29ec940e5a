#include <doctest.h>

#include "sdl/parser.hpp"
#include "sdl/render.hpp"

using namespace sdl;

namespace {
const char* kListing4Frame = R"(
Class: 'Seamless Quality Claim'
  EquivalentTo:
        'Quality Claim'
    and (prescribes some 'Seamless Integration')
    and (prescribes some 'Seamless Interaction Capability')
    and (prescribes some 'Seamless Quality-in-Use')
)";
}

TEST_CASE("class frame with an equivalence lowers to declaration + axiom") {
    Ontology onto = parse_ontology(kListing4Frame);
    REQUIRE(onto.axioms.size() == 2);
    CHECK(onto.axioms[0].kind == AxiomKind::Declaration);
    CHECK(onto.axioms[0].declKind == DeclKind::Class);
    CHECK(onto.axioms[0].names[0] == "Seamless Quality Claim");

    const Axiom& eq = onto.axioms[1];
    REQUIRE(eq.kind == AxiomKind::EquivalentClasses);
    REQUIRE(eq.concepts.size() == 2);
    CHECK(eq.concepts[0]->kind == ConceptKind::Named);
    const ConceptExpr& rhs = *eq.concepts[1];
    REQUIRE(rhs.kind == ConceptKind::And);
    REQUIRE(rhs.args.size() == 4);
    CHECK(rhs.args[0]->name == "Quality Claim");
    for (int i = 1; i <= 3; ++i) {
        CHECK(rhs.args[i]->kind == ConceptKind::Some);
        CHECK(rhs.args[i]->role.name == "prescribes");
    }
    CHECK(rhs.args[3]->args[0]->name == "Seamless Quality-in-Use");
}

TEST_CASE("empty ontology parses to zero axioms") {
    Ontology onto = parse_ontology("Ontology: <http://example.org/empty>");
    CHECK(onto.iri == "http://example.org/empty");
    CHECK(onto.axioms.empty());
}

TEST_CASE("nested conjunction filler (third conjunct of the environment axiom)") {
    ConceptPtr c = parse_concept(
        "'Digital Engineering Environment' and 'Engineered System' and "
        "('is carrier of' some ('High-Integrity Level Claim' and 'Seamless Quality Claim')) and "
        "('has member part' some 'Trustworthy Computing Base')");
    REQUIRE(c->kind == ConceptKind::And);
    REQUIRE(c->args.size() == 4);
    const ConceptExpr& third = *c->args[2];
    REQUIRE(third.kind == ConceptKind::Some);
    CHECK(third.role.name == "is carrier of");
    REQUIRE(third.args[0]->kind == ConceptKind::And);
    CHECK(third.args[0]->args[0]->name == "High-Integrity Level Claim");
    CHECK(third.args[0]->args[1]->name == "Seamless Quality Claim");
}

TEST_CASE("restriction binds tighter than and, which binds tighter than or") {
    ConceptPtr c = parse_concept("A and B or C");
    REQUIRE(c->kind == ConceptKind::Or);
    REQUIRE(c->args.size() == 2);
    CHECK(c->args[0]->kind == ConceptKind::And);
    CHECK(c->args[1]->name == "C");

    ConceptPtr d = parse_concept("Paradigm and ('is about' some Correct-by-Construction)");
    REQUIRE(d->kind == ConceptKind::And);
    CHECK(d->args[0]->name == "Paradigm");
    CHECK(d->args[1]->kind == ConceptKind::Some);
    CHECK(d->args[1]->args[0]->name == "Correct-by-Construction");

    ConceptPtr e = parse_concept("r some A and B");
    REQUIRE(e->kind == ConceptKind::And);
    CHECK(e->args[0]->kind == ConceptKind::Some);
    CHECK(e->args[1]->name == "B");
}

TEST_CASE("not owl:Nothing and builtin names") {
    ConceptPtr c = parse_concept("not owl:Nothing");
    REQUIRE(c->kind == ConceptKind::Not);
    CHECK(c->args[0]->kind == ConceptKind::Bottom);
    CHECK(parse_concept("owl:Thing")->kind == ConceptKind::Top);
}

TEST_CASE("cardinalities, inverse roles, value and oneOf parse") {
    ConceptPtr c = parse_concept("'has member part' min 2 and r max 0 and s exactly 1");
    REQUIRE(c->kind == ConceptKind::And);
    CHECK(c->args[0]->kind == ConceptKind::Min);
    CHECK(c->args[0]->number == 2);
    CHECK(c->args[1]->kind == ConceptKind::Max);
    CHECK(c->args[2]->kind == ConceptKind::Exact);

    ConceptPtr inv = parse_concept("inverse prescribes some A");
    REQUIRE(inv->kind == ConceptKind::Some);
    CHECK(inv->role.inverted);

    ConceptPtr hv = parse_concept("r value bob");
    REQUIRE(hv->kind == ConceptKind::HasValue);
    CHECK(hv->individuals[0] == "bob");

    ConceptPtr oo = parse_concept("{alice, bob}");
    REQUIRE(oo->kind == ConceptKind::OneOf);
    CHECK(oo->individuals.size() == 2);
}

TEST_CASE("qualified cardinality is rejected with a tier message") {
    try {
        parse_concept("r min 2 'Quality Claim'");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("qualified") != std::string::npos);
    }
}

TEST_CASE("datatype literals are rejected inside class expressions") {
    CHECK_THROWS_AS(parse_concept("A and \"literal\""), ParseError);
    CHECK_THROWS_AS(parse_concept("r some 3"), ParseError);
}

TEST_CASE("parse errors carry expected sets and in-range locations") {
    const std::string input = "Class: A\n  SubClassOf: and B";
    try {
        parse_ontology(input);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(!e.expected().empty());
        CHECK(e.where().line >= 1);
        CHECK(e.where().line <= 2);
        CHECK(e.where().column >= 1);
    }
}

TEST_CASE("object property and individual frames lower to role and assertion axioms") {
    Ontology onto = parse_ontology(R"(
ObjectProperty: prescribes
  InverseOf: 'prescribed by'
  Characteristics: Transitive
  SubPropertyOf: relates
  Domain: 'Directive Information Content Entity'
  Range: entity

Individual: OMG
  Types: 'Standards Organization'
  Facts: 'is carrier of' SysML
)");
    std::vector<AxiomKind> kinds;
    for (const auto& ax : onto.axioms) kinds.push_back(ax.kind);
    CHECK(kinds == std::vector<AxiomKind>{
                       AxiomKind::Declaration, AxiomKind::InverseProperties,
                       AxiomKind::TransitiveProperty, AxiomKind::SubPropertyOf, AxiomKind::Domain,
                       AxiomKind::Range, AxiomKind::Declaration, AxiomKind::ClassAssertion,
                       AxiomKind::PropertyAssertion});
    CHECK(onto.axioms[8].names[0] == "OMG");
    CHECK(onto.axioms[8].roles[0].name == "is carrier of");
    CHECK(onto.axioms[8].names[1] == "SysML");
}

TEST_CASE("unsupported property characteristics are parse errors") {
    CHECK_THROWS_AS(parse_ontology("ObjectProperty: r\n Characteristics: Functional"),
                    ParseError);
}

TEST_CASE("prefix declarations expand and unknown prefixes fail") {
    Ontology onto = parse_ontology(
        "Prefix: ex: <http://example.org/>\nClass: ex:Widget\n  SubClassOf: owl:Thing");
    CHECK(onto.axioms[0].names[0] == "http://example.org/Widget");
    CHECK_THROWS_AS(parse_concept("nope:Widget"), ParseError);
}

TEST_CASE("inline axiom lines parse for the manifest format") {
    Axiom ax = parse_axiom_line("'Seamless Interface' SubClassOf: Interface");
    CHECK(ax.kind == AxiomKind::SubClassOf);
    CHECK(ax.concepts[0]->name == "Seamless Interface");
    Axiom eq = parse_axiom_line("A EquivalentTo: B and r some C");
    CHECK(eq.kind == AxiomKind::EquivalentClasses);
}

TEST_CASE("annotations attach to the frame subject") {
    Ontology onto = parse_ontology(R"(
Class: 'Quality Claim'
  Annotations: skos:definition "A claim about quality.",
               dc:source "ISO/IEC/IEEE 15026-1:2019"
)");
    REQUIRE(onto.axioms.size() == 3);
    CHECK(onto.axioms[1].kind == AxiomKind::AnnotationAssertion);
    CHECK(onto.axioms[1].names[0] == "Quality Claim");
    CHECK(onto.axioms[1].names[1] == "http://www.w3.org/2004/02/skos/core#definition");
    CHECK(onto.axioms[1].value.text == "A claim about quality.");
    CHECK(onto.axioms[2].names[1] == "http://purl.org/dc/elements/1.1/source");
}
