#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdl/ast.hpp"
#include "sdl/gci.hpp"
#include "sdl/knowledge_base.hpp"
#include "sdl/rolebox.hpp"

namespace sdl {

enum class ClashKind { ComplementPair, BottomInLabel, CardinalityConflict };

const char* to_string(ClashKind kind);

/// Why a tableau closed: the clash kind, the concepts involved (rendered),
/// and the source axioms whose GCIs fed the clash. Index -1 stands for the
/// query concept itself.
struct ClashInfo {
    ClashKind kind = ClashKind::BottomInLabel;
    std::string description;
    std::vector<int> axiomIndices;  // sorted, deduplicated, may contain -1
};

/// Satisfiable verdicts keep a readable summary of the completion graph.
struct WitnessNode {
    int id = 0;
    bool root = false;
    bool blocked = false;
    std::vector<std::string> labels;  // rendered concepts, sorted
};

struct WitnessEdge {
    int from = 0;
    int to = 0;
    std::vector<std::string> roles;  // rendered (synthetic inverses shown as `inverse r`)
};

struct CompletionGraphSummary {
    std::vector<WitnessNode> nodes;
    std::vector<WitnessEdge> edges;
};

struct SatResult {
    bool satisfiable = true;
    std::optional<CompletionGraphSummary> witness;  // present iff satisfiable
    std::optional<ClashInfo> clash;                 // present iff unsatisfiable
};

/// Tableau decision procedure for the supported fragment: ALC + role
/// hierarchies + transitive roles + inverses + unqualified number
/// restrictions, with GCIs internalized into every node and pairwise
/// blocking for termination.
///
/// The reasoner itself is immutable after construction; every query owns a
/// private completion graph, so concurrent calls on one instance are safe.
class Reasoner {
public:
    struct Options {
        std::size_t maxNodes = 100000;
    };

    explicit Reasoner(const KnowledgeBase& kb, Options options = {});

    /// Satisfiability of `c` with respect to the whole KB (TBox, RBox and
    /// ABox). Throws UnsupportedFeature on nominal-tier constructs or
    /// cardinality over non-simple roles, ResourceLimit past maxNodes.
    SatResult is_satisfiable(const ConceptPtr& c) const;

    /// Consistency of the KB itself: root nodes for every ABox individual
    /// (or one anonymous node when the ABox is empty, since models must have
    /// non-empty domains).
    SatResult is_consistent() const;

    /// sub <= sup, decided by refutation: unsat(sub and not sup).
    bool subsumes(const ConceptPtr& sub, const ConceptPtr& sup) const;

    const RoleBox& role_box() const { return roleBox_; }
    const std::vector<GCI>& gcis() const { return gcis_; }
    const KnowledgeBase& kb() const { return kb_; }

private:
    struct AboxNodeSeed {
        std::string individual;
        std::vector<std::pair<ConceptPtr, int>> labels;  // nnf concept, axiom index
    };
    struct AboxEdgeSeed {
        std::size_t from, to;
        std::string role;  // canonical
        int axiomIndex;
    };

    SatResult run(const ConceptPtr* query) const;

    const KnowledgeBase& kb_;
    Options options_;
    RoleBox roleBox_;
    std::vector<GCI> gcis_;
    std::vector<AboxNodeSeed> aboxNodes_;
    std::vector<AboxEdgeSeed> aboxEdges_;
};

}  // namespace sdl
