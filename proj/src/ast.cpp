#include "sdl/ast.hpp"

#include <functional>

namespace sdl {

const std::vector<std::pair<std::string, std::string>>& builtin_prefixes() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"owl", "http://www.w3.org/2002/07/owl#"},
        {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
        {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
        {"xsd", "http://www.w3.org/2001/XMLSchema#"},
        {"skos", "http://www.w3.org/2004/02/skos/core#"},
        {"dc", "http://purl.org/dc/elements/1.1/"},
    };
    return table;
}

std::string expand_builtin(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) return name;
    std::string pfx = name.substr(0, colon);
    for (const auto& [p, iri] : builtin_prefixes()) {
        if (p == pfx) return iri + name.substr(colon + 1);
    }
    return name;
}

bool operator==(const ConceptExpr& a, const ConceptExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
            return true;
        case ConceptKind::Named:
            return a.name == b.name;
        case ConceptKind::And:
        case ConceptKind::Or: {
            if (a.args.size() != b.args.size()) return false;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                if (!(*a.args[i] == *b.args[i])) return false;
            return true;
        }
        case ConceptKind::Not:
            return *a.args[0] == *b.args[0];
        case ConceptKind::Some:
        case ConceptKind::Only:
            return a.role == b.role && *a.args[0] == *b.args[0];
        case ConceptKind::Min:
        case ConceptKind::Max:
        case ConceptKind::Exact:
            return a.number == b.number && a.role == b.role;
        case ConceptKind::OneOf:
            return a.individuals == b.individuals;
        case ConceptKind::HasValue:
            return a.role == b.role && a.individuals == b.individuals;
    }
    return false;
}

std::size_t hash_value(const ConceptExpr& c) {
    auto mix = [](std::size_t h, std::size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::size_t h = static_cast<std::size_t>(c.kind) * 0x100000001b3ULL;
    std::hash<std::string> hs;
    switch (c.kind) {
        case ConceptKind::Named:
            h = mix(h, hs(c.name));
            break;
        case ConceptKind::And:
        case ConceptKind::Or:
            for (const auto& a : c.args) h = mix(h, hash_value(*a));
            break;
        case ConceptKind::Not:
            h = mix(h, hash_value(*c.args[0]));
            break;
        case ConceptKind::Some:
        case ConceptKind::Only:
            h = mix(h, hs(c.role.name));
            h = mix(h, c.role.inverted ? 7 : 3);
            h = mix(h, hash_value(*c.args[0]));
            break;
        case ConceptKind::Min:
        case ConceptKind::Max:
        case ConceptKind::Exact:
            h = mix(h, c.number);
            h = mix(h, hs(c.role.name));
            h = mix(h, c.role.inverted ? 7 : 3);
            break;
        case ConceptKind::OneOf:
            for (const auto& i : c.individuals) h = mix(h, hs(i));
            break;
        case ConceptKind::HasValue:
            h = mix(h, hs(c.role.name));
            h = mix(h, hs(c.individuals[0]));
            break;
        default:
            break;
    }
    return h;
}

namespace {
ConceptPtr make(ConceptExpr&& e) { return std::make_shared<const ConceptExpr>(std::move(e)); }
}  // namespace

ConceptPtr make_named(std::string name) {
    ConceptExpr e;
    e.kind = ConceptKind::Named;
    e.name = std::move(name);
    return make(std::move(e));
}

ConceptPtr make_top() {
    static const ConceptPtr top = make(ConceptExpr{});
    return top;
}

ConceptPtr make_bottom() {
    static const ConceptPtr bot = [] {
        ConceptExpr e;
        e.kind = ConceptKind::Bottom;
        return make(std::move(e));
    }();
    return bot;
}

ConceptPtr make_and(std::vector<ConceptPtr> args) {
    ConceptExpr e;
    e.kind = ConceptKind::And;
    e.args = std::move(args);
    return make(std::move(e));
}

ConceptPtr make_or(std::vector<ConceptPtr> args) {
    ConceptExpr e;
    e.kind = ConceptKind::Or;
    e.args = std::move(args);
    return make(std::move(e));
}

ConceptPtr make_not(ConceptPtr arg) {
    ConceptExpr e;
    e.kind = ConceptKind::Not;
    e.args = {std::move(arg)};
    return make(std::move(e));
}

ConceptPtr make_some(RoleExpr role, ConceptPtr filler) {
    ConceptExpr e;
    e.kind = ConceptKind::Some;
    e.role = std::move(role);
    e.args = {std::move(filler)};
    return make(std::move(e));
}

ConceptPtr make_only(RoleExpr role, ConceptPtr filler) {
    ConceptExpr e;
    e.kind = ConceptKind::Only;
    e.role = std::move(role);
    e.args = {std::move(filler)};
    return make(std::move(e));
}

static ConceptPtr make_card(ConceptKind k, unsigned n, RoleExpr role) {
    ConceptExpr e;
    e.kind = k;
    e.number = n;
    e.role = std::move(role);
    return make(std::move(e));
}

ConceptPtr make_min(unsigned n, RoleExpr role) { return make_card(ConceptKind::Min, n, std::move(role)); }
ConceptPtr make_max(unsigned n, RoleExpr role) { return make_card(ConceptKind::Max, n, std::move(role)); }
ConceptPtr make_exact(unsigned n, RoleExpr role) { return make_card(ConceptKind::Exact, n, std::move(role)); }

ConceptPtr make_one_of(std::vector<std::string> individuals) {
    ConceptExpr e;
    e.kind = ConceptKind::OneOf;
    e.individuals = std::move(individuals);
    return make(std::move(e));
}

ConceptPtr make_has_value(RoleExpr role, std::string individual) {
    ConceptExpr e;
    e.kind = ConceptKind::HasValue;
    e.role = std::move(role);
    e.individuals = {std::move(individual)};
    return make(std::move(e));
}

bool contains_nominal(const ConceptExpr& c) {
    if (c.kind == ConceptKind::OneOf || c.kind == ConceptKind::HasValue) return true;
    for (const auto& a : c.args)
        if (contains_nominal(*a)) return true;
    return false;
}

bool operator==(const Axiom& a, const Axiom& b) {
    if (a.kind != b.kind || a.declKind != b.declKind || a.names != b.names ||
        a.roles != b.roles || !(a.value == b.value))
        return false;
    if (a.concepts.size() != b.concepts.size()) return false;
    for (std::size_t i = 0; i < a.concepts.size(); ++i)
        if (!(*a.concepts[i] == *b.concepts[i])) return false;
    return true;
}

bool operator==(const Ontology& a, const Ontology& b) {
    return a.iri == b.iri && a.prefixes == b.prefixes && a.annotations == b.annotations &&
           a.axioms == b.axioms;
}

}  // namespace sdl
