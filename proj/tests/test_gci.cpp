#include <doctest.h>

#include "sdl/gci.hpp"
#include "sdl/parser.hpp"
#include "sdl/render.hpp"

using namespace sdl;

namespace {
Axiom equivalent(std::vector<ConceptPtr> cs) {
    Axiom ax;
    ax.kind = AxiomKind::EquivalentClasses;
    ax.concepts = std::move(cs);
    return ax;
}
}  // namespace

TEST_CASE("an equivalence lowers to both inclusion directions") {
    ConceptPtr lhs = make_named("Trustworthiness");
    ConceptPtr rhs = parse_concept(
        "Acceptability and ('specifically depends on' some ('Complete Assurance Case Report' "
        "and ('is carrier of' some 'Trustworthiness Quality Claim')))");
    auto gcis = to_gcis({equivalent({lhs, rhs})});
    REQUIRE(gcis.size() == 2);
    CHECK(*gcis[0].lhs == *lhs);
    CHECK(*gcis[0].rhs == *rhs);
    CHECK(*gcis[1].lhs == *rhs);
    CHECK(*gcis[1].rhs == *lhs);
    // internalized disjunct is in NNF
    CHECK(gcis[0].disjunct->kind == ConceptKind::Or);
}

TEST_CASE("n-member equivalences yield n*(n-1) GCIs") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<ConceptPtr> members;
        for (std::size_t i = 0; i < n; ++i) members.push_back(make_named("C" + std::to_string(i)));
        CHECK(to_gcis({equivalent(std::move(members))}).size() == n * (n - 1));
    }
    // degenerate but legal: EquivalentClasses(A, A)
    auto gcis = to_gcis({equivalent({make_named("A"), make_named("A")})});
    REQUIRE(gcis.size() == 2);
    CHECK(*gcis[0].lhs == *gcis[0].rhs);
}

TEST_CASE("domains and ranges translate to their GCI forms") {
    Axiom dom;
    dom.kind = AxiomKind::Domain;
    dom.roles = {{"prescribes", false}};
    dom.concepts = {make_named("Directive Information Content Entity")};
    auto gcis = to_gcis({dom});
    REQUIRE(gcis.size() == 1);
    CHECK(render(gcis[0].lhs) == "prescribes some owl:Thing");
    CHECK(gcis[0].rhs->name == "Directive Information Content Entity");

    Axiom range;
    range.kind = AxiomKind::Range;
    range.roles = {{"prescribes", false}};
    range.concepts = {make_named("entity")};
    auto rgcis = to_gcis({range});
    REQUIRE(rgcis.size() == 1);
    CHECK(rgcis[0].lhs->kind == ConceptKind::Top);
    CHECK(render(rgcis[0].rhs) == "prescribes only entity");
}

TEST_CASE("disjointness lowers once per unordered pair") {
    Axiom dis;
    dis.kind = AxiomKind::DisjointClasses;
    dis.concepts = {make_named("A"), make_named("B"), make_named("C")};
    auto gcis = to_gcis({dis});
    CHECK(gcis.size() == 3);
    CHECK(gcis[0].rhs->kind == ConceptKind::Not);
}

TEST_CASE("nominal constructs are rejected at lowering") {
    Axiom sub;
    sub.kind = AxiomKind::SubClassOf;
    sub.concepts = {make_one_of({"a"}), make_named("B")};
    CHECK_THROWS_AS(to_gcis({sub}), UnsupportedFeature);

    Axiom hv;
    hv.kind = AxiomKind::SubClassOf;
    hv.concepts = {make_named("B"), make_has_value({"r", false}, "a")};
    CHECK_THROWS_AS(to_gcis({hv}), UnsupportedFeature);
}

TEST_CASE("provenance indices point back at the source axioms") {
    Axiom decl;
    decl.kind = AxiomKind::Declaration;
    decl.names = {"A"};
    Axiom sub;
    sub.kind = AxiomKind::SubClassOf;
    sub.concepts = {make_named("A"), make_named("B")};
    auto gcis = to_gcis({decl, sub});
    REQUIRE(gcis.size() == 1);
    CHECK(gcis[0].axiomIndex == 1);
}
