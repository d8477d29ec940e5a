#pragma once

#include <string>

#include "sdl/ast.hpp"

namespace sdl {

/// Renders a resolved name in the shortest form that re-parses to the same
/// name: builtin-prefixed (owl:Thing style), bare, <IRI>, or 'quoted'.
std::string render_name(const std::string& name);

std::string render_role(const RoleExpr& role);

/// Manchester text for a class expression. Non-atomic operands are always
/// parenthesized, matching the style `A and (not A)`.
std::string render(const ConceptExpr& c);
inline std::string render(const ConceptPtr& c) { return render(*c); }

/// One-line form for class axioms: `C SubClassOf: D` / `C EquivalentTo: D`.
std::string render_axiom(const Axiom& ax);

/// Full document: prefixes, header, then one frame per Declaration axiom with
/// its clauses replayed in order. Requires a frame-shaped axiom list (the
/// shape parse_ontology produces).
std::string render(const Ontology& onto);

}  // namespace sdl
