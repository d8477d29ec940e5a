#include <doctest.h>

#include <random>

#include "sdl/lexer.hpp"

using namespace sdl;

TEST_CASE("quoted names, keywords and punctuation") {
    auto toks = tokenize("'Quality Claim' and (prescribes some 'Seamless Integration')");
    REQUIRE(toks.size() == 7);
    CHECK(toks[0].kind == TokenKind::QuotedName);
    CHECK(toks[0].text == "Quality Claim");
    CHECK(toks[1].kind == TokenKind::Keyword);
    CHECK(toks[1].text == "and");
    CHECK(toks[2].kind == TokenKind::Punctuation);
    CHECK(toks[2].text == "(");
    CHECK(toks[3].kind == TokenKind::SimpleName);
    CHECK(toks[3].text == "prescribes");
    CHECK(toks[4].kind == TokenKind::Keyword);
    CHECK(toks[4].text == "some");
    CHECK(toks[5].kind == TokenKind::QuotedName);
    CHECK(toks[5].text == "Seamless Integration");
    CHECK(toks[6].kind == TokenKind::Punctuation);
    CHECK(toks[6].text == ")");
}

TEST_CASE("empty input yields no tokens") { CHECK(tokenize("").empty()); }

TEST_CASE("unqualified cardinality token stream") {
    auto toks = tokenize("min 2 'has member part'");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].kind == TokenKind::Keyword);
    CHECK(toks[0].text == "min");
    CHECK(toks[1].kind == TokenKind::Integer);
    CHECK(toks[1].text == "2");
    CHECK(toks[2].kind == TokenKind::QuotedName);
    CHECK(toks[2].text == "has member part");
}

TEST_CASE("line and column point at the first character") {
    auto toks = tokenize("A\n  'b c' # note\nClass: D");
    REQUIRE(toks.size() >= 4);
    CHECK(toks[0].line == 1);
    CHECK(toks[0].column == 1);
    CHECK(toks[1].line == 2);
    CHECK(toks[1].column == 3);
    CHECK(toks[2].kind == TokenKind::Comment);
    CHECK(toks[2].text == " note");
    CHECK(toks[3].kind == TokenKind::Keyword);
    CHECK(toks[3].text == "Class:");
    CHECK(toks[3].line == 3);
}

TEST_CASE("prefixed names vs frame keywords") {
    auto toks = tokenize("owl:Thing SubClassOf: skos:definition :local");
    REQUIRE(toks.size() == 4);
    CHECK(toks[0].kind == TokenKind::PrefixedName);
    CHECK(toks[0].text == "owl:Thing");
    CHECK(toks[1].kind == TokenKind::Keyword);
    CHECK(toks[1].text == "SubClassOf:");
    CHECK(toks[2].kind == TokenKind::PrefixedName);
    CHECK(toks[3].kind == TokenKind::PrefixedName);
    CHECK(toks[3].text == ":local");
}

TEST_CASE("IRI references and string literals") {
    auto toks = tokenize("<http://example.org/x> \"a \\\"b\\\"\\n\"");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].kind == TokenKind::IriRef);
    CHECK(toks[0].text == "http://example.org/x");
    CHECK(toks[1].kind == TokenKind::StringLiteral);
    CHECK(toks[1].text == "a \"b\"\n");
}

TEST_CASE("unterminated quoted name reports its location") {
    try {
        tokenize("A and\n  'oops", "f.omn");
        FAIL("expected LexError");
    } catch (const LexError& e) {
        CHECK(e.where().line == 2);
        CHECK(e.where().column == 3);
        CHECK(e.where().file == "f.omn");
    }
}

TEST_CASE("concatenating raw spellings reproduces the input") {
    std::string input = "Class: 'A b'  # c\n  SubClassOf: owl:Thing, (X and not Y)\n";
    auto toks = tokenize(input);
    // splice raws back over the original: raws must appear in order at
    // non-decreasing offsets, with only whitespace between them
    std::size_t pos = 0;
    for (const auto& t : toks) {
        std::size_t at = input.find(t.raw, pos);
        REQUIRE(at != std::string::npos);
        for (std::size_t i = pos; i < at; ++i)
            CHECK(std::isspace(static_cast<unsigned char>(input[i])));
        pos = at + t.raw.size();
    }
    for (std::size_t i = pos; i < input.size(); ++i)
        CHECK(std::isspace(static_cast<unsigned char>(input[i])));
}

TEST_CASE("arbitrary bytes never crash the lexer") {
    std::mt19937 rng(7);
    for (int round = 0; round < 500; ++round) {
        std::string bytes;
        int len = static_cast<int>(rng() % 64);
        for (int i = 0; i < len; ++i) bytes += static_cast<char>(rng() % 256);
        try {
            tokenize(bytes);
        } catch (const LexError&) {
            // fine: diagnosed, not crashed
        }
    }
}
