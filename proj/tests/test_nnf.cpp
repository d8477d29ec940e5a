#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "sdl/model_enum.hpp"
#include "sdl/nnf.hpp"
#include "sdl/render.hpp"

using namespace sdl;

namespace {

bool negation_only_on_named(const ConceptExpr& c) {
    if (c.kind == ConceptKind::Not && c.args[0]->kind != ConceptKind::Named) return false;
    for (const auto& a : c.args)
        if (!negation_only_on_named(*a)) return false;
    return true;
}

}  // namespace

TEST_CASE("De Morgan over and with a pushed-through restriction") {
    // not (A and r some B)  ->  not A or (r only not B)
    ConceptPtr in = make_not(
        make_and({make_named("A"), make_some({"r", false}, make_named("B"))}));
    ConceptPtr out = nnf(in);
    REQUIRE(out->kind == ConceptKind::Or);
    CHECK(out->args[0]->kind == ConceptKind::Not);
    CHECK(out->args[0]->args[0]->name == "A");
    REQUIRE(out->args[1]->kind == ConceptKind::Only);
    CHECK(out->args[1]->args[0]->kind == ConceptKind::Not);
}

TEST_CASE("cardinality duals") {
    ConceptPtr c = nnf(make_not(make_max(2, {"r", false})));
    REQUIRE(c->kind == ConceptKind::Min);
    CHECK(c->number == 3);

    ConceptPtr d = nnf(make_not(make_min(0, {"r", false})));
    CHECK(d->kind == ConceptKind::Bottom);

    ConceptPtr e = nnf(make_not(make_min(2, {"r", false})));
    REQUIRE(e->kind == ConceptKind::Max);
    CHECK(e->number == 1);

    // exactly n lowers to a min/max pair
    ConceptPtr f = nnf(make_exact(2, {"r", false}));
    REQUIRE(f->kind == ConceptKind::And);
    CHECK(f->args[0]->kind == ConceptKind::Min);
    CHECK(f->args[1]->kind == ConceptKind::Max);
}

TEST_CASE("double negation and top/bottom flips") {
    ConceptPtr a = make_named("A");
    CHECK(*nnf(make_not(make_not(a))) == *a);
    CHECK(nnf(make_not(make_top()))->kind == ConceptKind::Bottom);
    CHECK(nnf(make_not(make_bottom()))->kind == ConceptKind::Top);
}

TEST_CASE("nnf is idempotent and pushes negation onto named classes only") {
    std::mt19937 rng(2024);
    testgen::ConceptGenOptions opt;
    for (int i = 0; i < 1200; ++i) {
        ConceptPtr c = testgen::random_concept(rng, opt);
        ConceptPtr once = nnf(c);
        CHECK(negation_only_on_named(*once));
        CHECK(*nnf(once) == *once);
    }
}

TEST_CASE("nnf preserves satisfiability per the finite-model oracle") {
    std::mt19937 rng(4096);
    testgen::ConceptGenOptions opt;
    opt.roleNames = {"r"};  // single role keeps exhaustive enumeration cheap
    int checked = 0;
    for (int i = 0; i < 250; ++i) {
        ConceptPtr c = testgen::random_concept(rng, opt);
        auto direct = enumerate_models({}, c, 3, 4);
        auto normal = enumerate_models({}, nnf(c), 3, 4);
        CHECK(direct == normal);
        ++checked;
    }
    CHECK(checked == 250);
}
