#include "sdl/parser.hpp"

#include <algorithm>

namespace sdl {

PrefixEnv::PrefixEnv() {
    for (const auto& [p, iri] : builtin_prefixes()) map_[p] = iri;
}

void PrefixEnv::declare(const std::string& prefix, const std::string& iri) {
    map_[prefix] = iri;
}

std::string PrefixEnv::expand(const std::string& prefixedName, const SourceLoc& at) const {
    auto colon = prefixedName.find(':');
    std::string pfx = colon == std::string::npos ? "" : prefixedName.substr(0, colon);
    std::string local = colon == std::string::npos ? prefixedName : prefixedName.substr(colon + 1);
    auto it = map_.find(pfx);
    if (it == map_.end())
        throw ParseError("undeclared prefix '" + pfx + ":'", at);
    return it->second + local;
}

namespace {

const std::string kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
const std::string kOwlNothing = "http://www.w3.org/2002/07/owl#Nothing";

class Parser {
public:
    Parser(const std::string& text, std::string file, PrefixEnv env)
        : file_(std::move(file)), env_(std::move(env)) {
        for (auto& t : tokenize(text, file_))
            if (t.kind != TokenKind::Comment) tokens_.push_back(std::move(t));
    }

    Ontology document() {
        Ontology onto;
        bool sawFrame = false;
        while (!done()) {
            const Token& t = peek();
            if (t.kind == TokenKind::Keyword && t.text == "Prefix:") {
                if (sawFrame || !onto.iri.empty())
                    fail("Prefix: declarations must precede all frames", {"Class:"});
                advance();
                prefix_declaration(onto);
            } else if (t.kind == TokenKind::Keyword && t.text == "Ontology:") {
                advance();
                if (!done() && peek().kind == TokenKind::IriRef) onto.iri = advance().text;
                // version IRI, if present
                if (!done() && peek().kind == TokenKind::IriRef) advance();
            } else if (t.kind == TokenKind::Keyword && t.text == "Import:") {
                int line = t.line;
                advance();
                Token iri = expect(TokenKind::IriRef, "ontology IRI", {"<IRI>"});
                Axiom ax;
                ax.kind = AxiomKind::Import;
                ax.names = {iri.text};
                ax.line = line;
                onto.axioms.push_back(std::move(ax));
            } else if (t.kind == TokenKind::Keyword && t.text == "Annotations:" && !sawFrame) {
                advance();
                ontology_annotations(onto);
            } else if (t.kind == TokenKind::Keyword && t.text == "Class:") {
                advance();
                class_frame(onto);
                sawFrame = true;
            } else if (t.kind == TokenKind::Keyword && t.text == "ObjectProperty:") {
                advance();
                object_property_frame(onto);
                sawFrame = true;
            } else if (t.kind == TokenKind::Keyword && t.text == "AnnotationProperty:") {
                advance();
                annotation_property_frame(onto);
                sawFrame = true;
            } else if (t.kind == TokenKind::Keyword && t.text == "Individual:") {
                advance();
                individual_frame(onto);
                sawFrame = true;
            } else {
                fail("expected a frame",
                     {"Ontology:", "Prefix:", "Import:", "Class:", "ObjectProperty:",
                      "AnnotationProperty:", "Individual:"});
            }
        }
        return onto;
    }

    ConceptPtr concept_only() {
        ConceptPtr c = description();
        if (!done()) fail("trailing input after class expression", {"end of input"});
        return c;
    }

    Axiom axiom_line() {
        ConceptPtr lhs = description();
        Axiom ax;
        ax.line = 1;
        if (accept_keyword("SubClassOf:")) {
            ax.kind = AxiomKind::SubClassOf;
            ax.concepts = {lhs, description()};
        } else if (accept_keyword("EquivalentTo:")) {
            ax.kind = AxiomKind::EquivalentClasses;
            ax.concepts = {lhs, description()};
        } else {
            fail("expected an axiom connective", {"SubClassOf:", "EquivalentTo:"});
        }
        if (!done()) fail("trailing input after axiom", {"end of input"});
        return ax;
    }

private:
    // --- token plumbing -----------------------------------------------------

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek(std::size_t ahead = 0) const {
        static const Token eof{};
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof;
    }
    Token advance() { return tokens_[pos_++]; }

    SourceLoc loc_here() const {
        if (done()) {
            if (tokens_.empty()) return {file_, 1, 1};
            const Token& last = tokens_.back();
            return {file_, last.line, last.column + static_cast<int>(last.raw.size())};
        }
        return {file_, peek().line, peek().column};
    }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
        throw ParseError(msg, loc_here(), std::move(expected));
    }

    Token expect(TokenKind kind, const std::string& what, std::vector<std::string> expected) {
        if (done() || peek().kind != kind)
            fail("expected " + what + (done() ? " but reached end of input" : ""), std::move(expected));
        return advance();
    }

    bool accept_keyword(const std::string& kw) {
        if (!done() && peek().kind == TokenKind::Keyword && peek().text == kw) {
            advance();
            return true;
        }
        return false;
    }

    bool accept_punct(char c) {
        if (!done() && peek().kind == TokenKind::Punctuation && peek().text[0] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect_punct(char c) {
        if (!accept_punct(c)) fail(std::string("expected '") + c + "'", {std::string(1, c)});
    }

    // --- names ---------------------------------------------------------------

    bool at_name() const {
        TokenKind k = peek().kind;
        return k == TokenKind::SimpleName || k == TokenKind::QuotedName ||
               k == TokenKind::PrefixedName || k == TokenKind::IriRef;
    }

    std::string name(const std::string& what) {
        if (!at_name()) fail("expected " + what, {"name"});
        Token t = advance();
        if (t.kind == TokenKind::PrefixedName)
            return env_.expand(t.text, {file_, t.line, t.column});
        return t.text;
    }

    // --- frames ----------------------------------------------------------------

    void prefix_declaration(Ontology& onto) {
        std::string pfx;
        if (!done() && peek().kind == TokenKind::Keyword && peek().text.size() >= 1 &&
            peek().text.back() == ':' && !is_frame_keyword(peek().text)) {
            pfx = advance().text;
            pfx.pop_back();  // drop ':'
        } else if (!done() && peek().kind == TokenKind::Punctuation && peek().text == ":") {
            advance();
        } else {
            fail("expected a prefix name", {"pfx:", ":"});
        }
        Token iri = expect(TokenKind::IriRef, "prefix IRI", {"<IRI>"});
        onto.prefixes.push_back({pfx, iri.text});
        env_.declare(pfx, iri.text);
    }

    static bool is_frame_keyword(const std::string& kw) {
        static const char* frames[] = {
            "Ontology:", "Prefix:", "Import:", "Class:", "ObjectProperty:",
            "AnnotationProperty:", "Individual:", "SubClassOf:", "EquivalentTo:",
            "DisjointWith:", "Annotations:", "SubPropertyOf:", "InverseOf:",
            "Characteristics:", "Domain:", "Range:", "Types:", "Facts:"};
        return std::find_if(std::begin(frames), std::end(frames),
                            [&](const char* f) { return kw == f; }) != std::end(frames);
    }

    void ontology_annotations(Ontology& onto) {
        do {
            std::string prop = name("an annotation property");
            onto.annotations.push_back({prop, annotation_value()});
        } while (accept_punct(','));
    }

    AnnotationValue annotation_value() {
        if (done()) fail("expected an annotation value", {"string", "name", "integer"});
        Token t = peek();
        if (t.kind == TokenKind::StringLiteral) {
            advance();
            // language tags / datatype suffixes are not modeled
            return {AnnotationValue::Kind::StringLiteral, t.text};
        }
        if (t.kind == TokenKind::Integer) {
            advance();
            return {AnnotationValue::Kind::Integer, t.text};
        }
        if (at_name()) return {AnnotationValue::Kind::Name, name("an annotation value")};
        fail("expected an annotation value", {"string", "name", "integer"});
    }

    void push_axiom(Ontology& onto, Axiom ax, int line) {
        ax.line = line;
        onto.axioms.push_back(std::move(ax));
    }

    void declare(Ontology& onto, DeclKind kind, const std::string& nm, int line) {
        Axiom ax;
        ax.kind = AxiomKind::Declaration;
        ax.declKind = kind;
        ax.names = {nm};
        push_axiom(onto, std::move(ax), line);
    }

    void annotations_clause(Ontology& onto, const std::string& subject) {
        do {
            int line = peek().line;
            std::string prop = name("an annotation property");
            Axiom ax;
            ax.kind = AxiomKind::AnnotationAssertion;
            ax.names = {subject, prop};
            ax.value = annotation_value();
            push_axiom(onto, std::move(ax), line);
        } while (accept_punct(','));
    }

    void class_frame(Ontology& onto) {
        int headerLine = loc_here().line;
        std::string subject = name("a class name");
        declare(onto, DeclKind::Class, subject, headerLine);
        ConceptPtr named = make_named(subject);
        while (!done()) {
            if (accept_keyword("SubClassOf:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::SubClassOf;
                    ax.concepts = {named, description()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("EquivalentTo:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::EquivalentClasses;
                    ax.concepts = {named, description()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("DisjointWith:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::DisjointClasses;
                    ax.concepts = {named, description()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Annotations:")) {
                annotations_clause(onto, subject);
            } else {
                break;
            }
        }
    }

    RoleExpr role_expr() {
        bool inv = accept_keyword("inverse");
        std::string nm = name("an object property name");
        return {nm, inv};
    }

    void object_property_frame(Ontology& onto) {
        int headerLine = loc_here().line;
        std::string subject = name("an object property name");
        declare(onto, DeclKind::ObjectProperty, subject, headerLine);
        RoleExpr self{subject, false};
        while (!done()) {
            if (accept_keyword("SubPropertyOf:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::SubPropertyOf;
                    ax.roles = {self, role_expr()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("EquivalentTo:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::EquivalentProperties;
                    ax.roles = {self, role_expr()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("InverseOf:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::InverseProperties;
                    ax.roles = {self, role_expr()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Characteristics:")) {
                do {
                    int line = loc_here().line;
                    if (done() || peek().kind != TokenKind::SimpleName)
                        fail("expected a property characteristic", {"Transitive"});
                    Token t = advance();
                    if (t.text != "Transitive")
                        throw ParseError("unsupported characteristic '" + t.text +
                                             "'; only Transitive is in the supported tier",
                                         {file_, t.line, t.column}, {"Transitive"});
                    Axiom ax;
                    ax.kind = AxiomKind::TransitiveProperty;
                    ax.roles = {self};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Domain:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::Domain;
                    ax.roles = {self};
                    ax.concepts = {description()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Range:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::Range;
                    ax.roles = {self};
                    ax.concepts = {description()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Annotations:")) {
                annotations_clause(onto, subject);
            } else {
                break;
            }
        }
    }

    void annotation_property_frame(Ontology& onto) {
        int headerLine = loc_here().line;
        std::string subject = name("an annotation property name");
        declare(onto, DeclKind::AnnotationProperty, subject, headerLine);
        while (!done() && accept_keyword("Annotations:")) annotations_clause(onto, subject);
    }

    void individual_frame(Ontology& onto) {
        int headerLine = loc_here().line;
        std::string subject = name("an individual name");
        declare(onto, DeclKind::NamedIndividual, subject, headerLine);
        while (!done()) {
            if (accept_keyword("Types:")) {
                do {
                    int line = loc_here().line;
                    Axiom ax;
                    ax.kind = AxiomKind::ClassAssertion;
                    ax.names = {subject};
                    ax.concepts = {description()};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Facts:")) {
                do {
                    int line = loc_here().line;
                    RoleExpr role = role_expr();
                    std::string object = name("an individual name");
                    Axiom ax;
                    ax.kind = AxiomKind::PropertyAssertion;
                    ax.names = {subject, object};
                    ax.roles = {role};
                    push_axiom(onto, std::move(ax), line);
                } while (accept_punct(','));
            } else if (accept_keyword("Annotations:")) {
                annotations_clause(onto, subject);
            } else {
                break;
            }
        }
    }

    // --- class expressions -------------------------------------------------
    // Precedence: not > restrictions > and > or; parentheses override.

    ConceptPtr description() {
        std::vector<ConceptPtr> parts{conjunction()};
        while (accept_keyword("or")) parts.push_back(conjunction());
        if (parts.size() == 1) return parts[0];
        return make_or(std::move(parts));
    }

    ConceptPtr conjunction() {
        std::vector<ConceptPtr> parts{primary()};
        while (accept_keyword("and")) parts.push_back(primary());
        if (parts.size() == 1) return parts[0];
        return make_and(std::move(parts));
    }

    ConceptPtr primary() {
        if (accept_keyword("not")) return make_not(primary());
        return restriction_or_atomic();
    }

    static bool is_restriction_keyword(const Token& t) {
        if (t.kind != TokenKind::Keyword) return false;
        return t.text == "some" || t.text == "only" || t.text == "min" || t.text == "max" ||
               t.text == "exactly" || t.text == "value";
    }

    bool starts_primary() const {
        if (done()) return false;
        const Token& t = peek();
        if (t.kind == TokenKind::SimpleName || t.kind == TokenKind::QuotedName ||
            t.kind == TokenKind::PrefixedName || t.kind == TokenKind::IriRef)
            return true;
        if (t.kind == TokenKind::Punctuation && (t.text == "(" || t.text == "{")) return true;
        if (t.kind == TokenKind::Keyword && (t.text == "not" || t.text == "inverse")) return true;
        return false;
    }

    ConceptPtr restriction_or_atomic() {
        if (done()) fail("expected a class expression", {"name", "(", "{", "not"});
        const Token& t = peek();

        if (t.kind == TokenKind::Keyword && t.text == "inverse") return restriction();
        if (at_name() && is_restriction_keyword(peek(1))) return restriction();

        if (t.kind == TokenKind::Punctuation && t.text == "(") {
            advance();
            ConceptPtr inner = description();
            expect_punct(')');
            return inner;
        }
        if (t.kind == TokenKind::Punctuation && t.text == "{") {
            advance();
            std::vector<std::string> individuals;
            do {
                individuals.push_back(name("an individual name"));
            } while (accept_punct(','));
            expect_punct('}');
            return make_one_of(std::move(individuals));
        }
        if (t.kind == TokenKind::StringLiteral || t.kind == TokenKind::Integer)
            throw ParseError(
                "datatype literals are not allowed inside class expressions (datatype "
                "reasoning is outside the supported tier)",
                {file_, t.line, t.column});
        if (at_name()) {
            std::string nm = name("a class name");
            if (nm == kOwlThing) return make_top();
            if (nm == kOwlNothing) return make_bottom();
            return make_named(std::move(nm));
        }
        fail("expected a class expression", {"name", "(", "{", "not"});
    }

    ConceptPtr restriction() {
        RoleExpr role = role_expr();
        if (done() || !is_restriction_keyword(peek()))
            fail("expected a restriction keyword",
                 {"some", "only", "min", "max", "exactly", "value"});
        Token kw = advance();
        if (kw.text == "some") return make_some(std::move(role), primary());
        if (kw.text == "only") return make_only(std::move(role), primary());
        if (kw.text == "value") return make_has_value(std::move(role), name("an individual name"));

        Token n = expect(TokenKind::Integer, "a non-negative integer", {"integer"});
        unsigned count = 0;
        try {
            count = static_cast<unsigned>(std::stoul(n.text));
        } catch (const std::out_of_range&) {
            throw ParseError("cardinality out of range", {file_, n.line, n.column});
        }
        if (starts_primary())
            throw ParseError(
                "qualified cardinality restrictions are not supported (unqualified tier); "
                "drop the filler after '" + kw.text + " " + n.text + "'",
                loc_here());
        if (kw.text == "min") return make_min(count, std::move(role));
        if (kw.text == "max") return make_max(count, std::move(role));
        return make_exact(count, std::move(role));
    }

    std::string file_;
    PrefixEnv env_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Ontology parse_ontology(const std::string& text, const std::string& file) {
    return Parser(text, file, PrefixEnv()).document();
}

ConceptPtr parse_concept(const std::string& text, const PrefixEnv& env, const std::string& file) {
    return Parser(text, file, env).concept_only();
}

Axiom parse_axiom_line(const std::string& text, const PrefixEnv& env, const std::string& file) {
    return Parser(text, file, env).axiom_line();
}

}  // namespace sdl
