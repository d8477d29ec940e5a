#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdl/reasoner.hpp"

namespace sdl {

/// Inferred subsumption DAG over named classes. Groups are equivalence
/// classes (mutual subsumption), sorted by lexicographically least member;
/// members are sorted within each group. Edges run sub -> super between
/// group indices and are transitively reduced. The Top group carries
/// owl:Thing, the Bottom group owl:Nothing plus every unsatisfiable class.
struct Taxonomy {
    std::vector<std::vector<std::string>> groups;
    std::vector<std::pair<int, int>> edges;
    int top = -1;
    int bottom = -1;

    /// Group index holding `name`, -1 if absent.
    int group_of(const std::string& name) const;

    /// Reflexive-transitive reachability sub -> super over the reduced DAG.
    bool below(int subGroup, int superGroup) const;
    bool below(const std::string& sub, const std::string& super) const;
};

/// Full classification. Requires a consistent KB (InconsistentKB otherwise);
/// told subsumers prune the pairwise subsumption tests.
Taxonomy classify(const Reasoner& reasoner);

/// Named classes whose satisfiability test closes, with clash provenance.
std::map<std::string, ClashInfo> unsatisfiable_classes(const Reasoner& reasoner);

/// SubClassOf -> one subsumption test; EquivalentClasses -> pairwise both
/// directions. Other axiom kinds are outside the entailment tier.
bool entails(const Reasoner& reasoner, const Axiom& axiom);

/// {"groups": [[names]], "edges": [[sub, super]], "top": i, "bottom": i}
std::string taxonomy_to_json(const Taxonomy& tax);

/// Indented tree rooted at owl:Thing; the Bottom group is printed last.
std::string taxonomy_to_text(const Taxonomy& tax);

}  // namespace sdl
