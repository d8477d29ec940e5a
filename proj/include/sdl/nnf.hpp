#pragma once

#include "sdl/ast.hpp"

namespace sdl {

/// Negation normal form: negation pushed down to named classes, `exactly`
/// lowered to a min/max pair, `min 0` simplified to owl:Thing. Idempotent.
/// Throws UnsupportedFeature on OneOf/HasValue nodes (nominal tier).
ConceptPtr nnf(const ConceptPtr& c);

/// nnf(not c) without materializing the intermediate negation.
ConceptPtr nnf_negated(const ConceptPtr& c);

}  // namespace sdl
