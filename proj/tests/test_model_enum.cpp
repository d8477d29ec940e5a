#include <doctest.h>

#include "sdl/model_enum.hpp"
#include "sdl/parser.hpp"

using namespace sdl;

namespace {
Axiom role_axiom(AxiomKind kind, const std::string& a, const std::string& b = "") {
    Axiom ax;
    ax.kind = kind;
    ax.roles = {{a, false}};
    if (!b.empty()) ax.roles.push_back({b, false});
    return ax;
}
}  // namespace

TEST_CASE("a bare class name has a one-element model") {
    auto models = enumerate_models({}, make_named("A"), 1);
    REQUIRE(!models.empty());
    CHECK(models[0].size == 1);
    CHECK(models[0].classExt.at("A") == 1u);  // A = whole domain in the first model
}

TEST_CASE("contradictions have no finite models") {
    ConceptPtr c = parse_concept("A and not A");
    for (int m = 1; m <= 3; ++m) CHECK(enumerate_models({}, c, m).empty());
}

TEST_CASE("cardinality conflict has no model up to domain four") {
    ConceptPtr c = parse_concept("r min 3 and r max 2 and (r only A)");
    CHECK(enumerate_models({}, c, 4).empty());
    // and the pieces alone are fine
    CHECK(!enumerate_models({}, parse_concept("r min 3"), 4).empty());
    CHECK(!enumerate_models({}, parse_concept("r max 2 and (r only A)"), 2).empty());
}

TEST_CASE("min 3 needs at least three distinct successors") {
    ConceptPtr c = parse_concept("r min 3");
    CHECK(enumerate_models({}, c, 2).empty());
    CHECK(!enumerate_models({}, c, 3).empty());
}

TEST_CASE("enumeration is deterministic and bounded by maxModels") {
    ConceptPtr c = parse_concept("A or B");
    auto first = enumerate_models({}, c, 2, 5);
    auto second = enumerate_models({}, c, 2, 5);
    CHECK(first == second);
    CHECK(first.size() == 5);
    CHECK(enumerate_models({}, c, 2, 1).size() == 1);
}

TEST_CASE("transitivity is enforced by filtering") {
    ConceptPtr c = parse_concept("(r some (r some A)) and (r only (not A))");
    std::vector<Axiom> trans = {role_axiom(AxiomKind::TransitiveProperty, "r")};
    CHECK(enumerate_models(trans, c, 3).empty());
    CHECK(!enumerate_models({}, c, 3).empty());
}

TEST_CASE("inverse roles are enforced") {
    ConceptPtr c = parse_concept("A and (r some ((not A) and (s only (not A))))");
    std::vector<Axiom> inv = {role_axiom(AxiomKind::InverseProperties, "r", "s")};
    CHECK(enumerate_models(inv, c, 3).empty());
    CHECK(!enumerate_models({}, c, 3).empty());
}

TEST_CASE("subroles are enforced") {
    ConceptPtr c = parse_concept("(r some A) and (s only (not A))");
    std::vector<Axiom> sub = {role_axiom(AxiomKind::SubPropertyOf, "r", "s")};
    CHECK(enumerate_models(sub, c, 3).empty());
    CHECK(!enumerate_models({}, c, 3).empty());
}

TEST_CASE("class axioms constrain models") {
    Axiom subclass;
    subclass.kind = AxiomKind::SubClassOf;
    subclass.concepts = {make_named("A"), make_named("B")};
    ConceptPtr c = parse_concept("A and not B");
    CHECK(enumerate_models({subclass}, c, 3).empty());
    CHECK(!enumerate_models({}, c, 1).empty());

    Axiom domain;
    domain.kind = AxiomKind::Domain;
    domain.roles = {{"r", false}};
    domain.concepts = {make_named("D")};
    CHECK(enumerate_models({domain}, parse_concept("(not D) and r some owl:Thing"), 3).empty());

    Axiom range;
    range.kind = AxiomKind::Range;
    range.roles = {{"r", false}};
    range.concepts = {make_named("D")};
    CHECK(enumerate_models({range}, parse_concept("r some (not D)"), 3).empty());
}

TEST_CASE("oversized signatures trip the resource guard") {
    // 15 classes: domain size 1 enumerates (one model), domain size 2 would
    // need 2^30 assignments and must refuse
    std::vector<ConceptPtr> parts;
    for (int i = 0; i < 15; ++i) parts.push_back(make_named("C" + std::to_string(i)));
    CHECK_THROWS_AS(enumerate_models({}, make_and(std::move(parts)), 2, 32), ResourceLimit);
}

TEST_CASE("nominal constructs are outside the oracle tier") {
    CHECK_THROWS_AS(enumerate_models({}, make_one_of({"a"}), 2), UnsupportedFeature);
}
