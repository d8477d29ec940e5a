#pragma once

#include <vector>

#include "sdl/ast.hpp"

namespace sdl {

/// General concept inclusion lhs <= rhs, with the internalized NNF disjunct
/// nnf(not lhs or rhs) precomputed. `axiomIndex` points back into the axiom
/// list the GCI was lowered from (-1 for ad-hoc GCIs).
struct GCI {
    ConceptPtr lhs;
    ConceptPtr rhs;
    ConceptPtr disjunct;
    int axiomIndex = -1;
};

GCI make_gci(ConceptPtr lhs, ConceptPtr rhs, int axiomIndex = -1);

/// Lowers class axioms to GCIs:
///   EquivalentClasses(C1..Cn)  -> all n*(n-1) ordered pairs
///   DisjointClasses(C1..Cn)    -> Ci <= not Cj per unordered pair
///   Domain(r, C)               -> some r owl:Thing <= C
///   Range(r, C)                -> owl:Thing <= only r C
///   SubClassOf                 -> as-is
/// Non-class axioms are ignored. Throws UnsupportedFeature if a nominal
/// construct (OneOf/HasValue) reaches this stage.
std::vector<GCI> to_gcis(const std::vector<Axiom>& axioms);

}  // namespace sdl
