#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sdl/ast.hpp"
#include "sdl/knowledge_base.hpp"

namespace sdl {

/// A finite interpretation. Extensions are bitmasks: class bit d means
/// element d is in the extension; role bit d*size+e means (d, e) holds.
struct Interpretation {
    int size = 1;
    std::map<std::string, std::uint32_t> classExt;
    std::map<std::string, std::uint32_t> roleExt;

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

/// Exhaustive finite-model search, the testing oracle for the tableau.
///
/// Enumerates every interpretation over domains of size 1..maxDomain (class
/// extensions and role extensions in lexicographic order, smaller domains
/// first), keeping those that satisfy every class axiom and role axiom and
/// give `c` a non-empty extension. Evaluation is direct semantic evaluation
/// of the source expressions; nothing is shared with the tableau or the NNF
/// transformation.
///
/// The signature is restricted to names occurring in `c` and the axioms.
/// ClassAssertion / PropertyAssertion / annotation / declaration axioms are
/// ignored: this is a TBox + RBox oracle.
///
/// Stops after maxModels models. Throws ResourceLimit when the search space
/// exceeds 2^budgetBits for some domain size, UnsupportedFeature on nominal
/// constructs.
std::vector<Interpretation> enumerate_models(const std::vector<Axiom>& axioms,
                                             const ConceptPtr& c, int maxDomain,
                                             std::size_t maxModels = 16,
                                             int budgetBits = 28);

std::vector<Interpretation> enumerate_models(const KnowledgeBase& kb, const ConceptPtr& c,
                                             int maxDomain, std::size_t maxModels = 16,
                                             int budgetBits = 28);

/// True if some model exists (maxModels = 1 short-circuit).
bool oracle_satisfiable(const std::vector<Axiom>& axioms, const ConceptPtr& c, int maxDomain,
                        int budgetBits = 28);

}  // namespace sdl
