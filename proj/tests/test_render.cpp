#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "sdl/parser.hpp"
#include "sdl/render.hpp"

using namespace sdl;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
}  // namespace

TEST_CASE("fixed renderings") {
    CHECK(render(make_top()) == "owl:Thing");
    CHECK(render(make_bottom()) == "owl:Nothing");
    ConceptPtr a = make_named("A");
    CHECK(render(make_and({a, make_not(a)})) == "A and (not A)");
    CHECK(render(make_some({"prescribes", false}, make_named("Seamless Integration"))) ==
          "prescribes some 'Seamless Integration'");
    CHECK(render(make_min(2, {"has member part", false})) == "'has member part' min 2");
    CHECK(render_name("http://www.w3.org/2004/02/skos/core#definition") == "skos:definition");
    CHECK(render_name("urn:sdl:corpus:sde") == "<urn:sdl:corpus:sde>");
    CHECK(render_name("Correct-by-Construction") == "Correct-by-Construction");
    CHECK(render_name("value") == "'value'");  // reserved word needs quoting
}

TEST_CASE("concept round trip on random expressions") {
    std::mt19937 rng(42);
    testgen::ConceptGenOptions opt;
    opt.classNames = {"A", "B", "Quality Claim", "Correct-by-Construction"};
    opt.roleNames = {"r", "has member part"};
    for (int i = 0; i < 500; ++i) {
        ConceptPtr c = testgen::random_concept(rng, opt);
        ConceptPtr back = parse_concept(render(c));
        CHECK(*back == *c);
    }
}

TEST_CASE("ontology round trip: parse(render(parse(p))) == parse(p)") {
    for (const char* file : {"bfo-stub.omn", "cco-stub.omn", "sde.omn"}) {
        std::string path = std::string(CORPUS_DIR) + "/" + file;
        Ontology first = parse_ontology(slurp(path), path);
        Ontology second = parse_ontology(render(first), "rendered");
        CHECK(first == second);
    }
}

TEST_CASE("ontology round trip on a synthetic document with every frame kind") {
    const char* doc = R"(
Prefix: ex: <http://example.org/>
Ontology: <http://example.org/all>
Annotations: skos:definition "test module"

Import: <http://example.org/other>

Class: ex:A
  SubClassOf: owl:Thing, 'B b' and (not ex:A)
  EquivalentTo: r only ('B b' or C)
  DisjointWith: D
  Annotations: dc:source "ISO 1"

ObjectProperty: r
  SubPropertyOf: s
  InverseOf: t
  Characteristics: Transitive
  Domain: C
  Range: r min 2

AnnotationProperty: ex:note

Individual: bob
  Types: C and r some D
  Facts: r alice
  Annotations: ex:note "individual"

Class: ex:A
  SubClassOf: C
)";
    // imports are opaque at parse level, so this needs no catalog
    Ontology first = parse_ontology(doc);
    Ontology second = parse_ontology(render(first));
    CHECK(first == second);
    // re-opened frame keeps both declarations
    int decls = 0;
    for (const auto& ax : first.axioms)
        if (ax.kind == AxiomKind::Declaration && ax.names[0] == "http://example.org/A") ++decls;
    CHECK(decls == 2);
}

TEST_CASE("parser never crashes on structured garbage") {
    std::mt19937 rng(99);
    const char* atoms[] = {"Class:", "and", "or", "not", "(", ")", "A", "'q n'", "some", "min",
                           "2", "owl:Thing", "SubClassOf:", ",", "{", "}", "\"s\"", "<http://x>"};
    for (int i = 0; i < 800; ++i) {
        std::string doc;
        int len = static_cast<int>(rng() % 20);
        for (int j = 0; j < len; ++j) {
            doc += atoms[rng() % (sizeof(atoms) / sizeof(atoms[0]))];
            doc += ' ';
        }
        try {
            parse_ontology(doc);
        } catch (const LexError&) {
        } catch (const ParseError& e) {
            CHECK(e.where().line >= 1);
        }
    }
}
