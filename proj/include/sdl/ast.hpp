#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sdl {

// ---------------------------------------------------------------------------
// Names
//
// Names are stored fully resolved: prefixed names are expanded against the
// active prefix environment at parse time, quoted and simple names are kept
// verbatim.  owl:Thing and owl:Nothing never appear as names; they lower to
// the Top/Bottom concept variants.

/// Well-known namespaces available without declaration.
/// Files may re-declare any of these prefixes to override them.
const std::vector<std::pair<std::string, std::string>>& builtin_prefixes();

/// Expands "pfx:local" using builtin prefixes only (used for config values
/// such as lint property names). Returns the input unchanged if the prefix
/// is unknown or absent.
std::string expand_builtin(const std::string& name);

// ---------------------------------------------------------------------------
// Roles

/// A role name or its inverse. Double inversion is normalized away by
/// construction: `inverted` is a plain flag, never stacked.
struct RoleExpr {
    std::string name;
    bool inverted = false;

    friend bool operator==(const RoleExpr&, const RoleExpr&) = default;
    RoleExpr inverse() const { return {name, !inverted}; }
};

// ---------------------------------------------------------------------------
// Concepts

enum class ConceptKind : std::uint8_t {
    Named,
    Top,
    Bottom,
    And,
    Or,
    Not,
    Some,
    Only,
    Min,
    Max,
    Exact,
    OneOf,
    HasValue,
};

struct ConceptExpr;
using ConceptPtr = std::shared_ptr<const ConceptExpr>;

/// Class-expression tree. Immutable after construction; subtrees are shared.
struct ConceptExpr {
    ConceptKind kind = ConceptKind::Top;
    std::string name;                      // Named
    std::vector<ConceptPtr> args;          // And/Or (>=2), Not/Some/Only (1)
    RoleExpr role;                         // Some/Only/Min/Max/Exact/HasValue
    unsigned number = 0;                   // Min/Max/Exact
    std::vector<std::string> individuals;  // OneOf; HasValue target in [0]
};

bool operator==(const ConceptExpr& a, const ConceptExpr& b);
inline bool operator!=(const ConceptExpr& a, const ConceptExpr& b) { return !(a == b); }

/// Structural hash, consistent with operator==.
std::size_t hash_value(const ConceptExpr& c);

// Constructors. And/Or require >= 2 operands.
ConceptPtr make_named(std::string name);
ConceptPtr make_top();
ConceptPtr make_bottom();
ConceptPtr make_and(std::vector<ConceptPtr> args);
ConceptPtr make_or(std::vector<ConceptPtr> args);
ConceptPtr make_not(ConceptPtr arg);
ConceptPtr make_some(RoleExpr role, ConceptPtr filler);
ConceptPtr make_only(RoleExpr role, ConceptPtr filler);
ConceptPtr make_min(unsigned n, RoleExpr role);
ConceptPtr make_max(unsigned n, RoleExpr role);
ConceptPtr make_exact(unsigned n, RoleExpr role);
ConceptPtr make_one_of(std::vector<std::string> individuals);
ConceptPtr make_has_value(RoleExpr role, std::string individual);

/// True if the expression contains a OneOf or HasValue node anywhere.
bool contains_nominal(const ConceptExpr& c);

// ---------------------------------------------------------------------------
// Axioms

enum class DeclKind : std::uint8_t { Class, ObjectProperty, AnnotationProperty, NamedIndividual };

enum class AxiomKind : std::uint8_t {
    Declaration,
    SubClassOf,
    EquivalentClasses,
    DisjointClasses,
    SubPropertyOf,
    EquivalentProperties,
    InverseProperties,
    TransitiveProperty,
    Domain,
    Range,
    ClassAssertion,
    PropertyAssertion,
    AnnotationAssertion,
    Import,
};

/// Value of an annotation assertion.
struct AnnotationValue {
    enum class Kind : std::uint8_t { StringLiteral, Name, Integer } kind = Kind::StringLiteral;
    std::string text;

    friend bool operator==(const AnnotationValue&, const AnnotationValue&) = default;
};

/// One axiom. Which fields are meaningful depends on `kind`:
///   Declaration          declKind, names[0]
///   SubClassOf           concepts[0] <= concepts[1]
///   EquivalentClasses    concepts (>= 2)
///   DisjointClasses      concepts (>= 2)
///   SubPropertyOf        roles[0] <= roles[1]
///   EquivalentProperties roles (>= 2)
///   InverseProperties    roles[0], roles[1]
///   TransitiveProperty   roles[0]
///   Domain / Range       roles[0], concepts[0]
///   ClassAssertion       names[0] : concepts[0]
///   PropertyAssertion    names[0] roles[0] names[1]
///   AnnotationAssertion  names[0] (subject), names[1] (property), value
///   Import               names[0] (ontology IRI)
struct Axiom {
    AxiomKind kind = AxiomKind::Declaration;
    DeclKind declKind = DeclKind::Class;
    std::vector<std::string> names;
    std::vector<ConceptPtr> concepts;
    std::vector<RoleExpr> roles;
    AnnotationValue value;
    int line = 0;  // 1-based source line of the owning clause

    // line is bookkeeping, not identity
    friend bool operator==(const Axiom& a, const Axiom& b);
};

struct PrefixDecl {
    std::string prefix;  // without the trailing colon; empty = default prefix
    std::string iri;

    friend bool operator==(const PrefixDecl&, const PrefixDecl&) = default;
};

/// Ontology-level annotation (from an Annotations: clause in the Ontology frame).
struct OntologyAnnotation {
    std::string property;
    AnnotationValue value;

    friend bool operator==(const OntologyAnnotation&, const OntologyAnnotation&) = default;
};

/// Parsed ontology document.
struct Ontology {
    std::string iri;  // empty if the Ontology: frame carried no IRI
    std::vector<PrefixDecl> prefixes;
    std::vector<OntologyAnnotation> annotations;
    std::vector<Axiom> axioms;

    friend bool operator==(const Ontology&, const Ontology&);
};

}  // namespace sdl
