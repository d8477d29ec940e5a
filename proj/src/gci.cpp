#include "sdl/gci.hpp"

#include "sdl/errors.hpp"
#include "sdl/nnf.hpp"
#include "sdl/render.hpp"

namespace sdl {

GCI make_gci(ConceptPtr lhs, ConceptPtr rhs, int axiomIndex) {
    GCI g;
    g.disjunct = make_or({nnf_negated(lhs), nnf(rhs)});
    g.lhs = std::move(lhs);
    g.rhs = std::move(rhs);
    g.axiomIndex = axiomIndex;
    return g;
}

namespace {

void check_tier(const ConceptPtr& c) {
    if (contains_nominal(*c))
        throw UnsupportedFeature("nominal construct in '" + render(c) +
                                 "' cannot be lowered (parse-only tier)");
}

}  // namespace

std::vector<GCI> to_gcis(const std::vector<Axiom>& axioms) {
    std::vector<GCI> out;
    for (std::size_t idx = 0; idx < axioms.size(); ++idx) {
        const Axiom& ax = axioms[idx];
        int at = static_cast<int>(idx);
        switch (ax.kind) {
            case AxiomKind::SubClassOf:
                check_tier(ax.concepts[0]);
                check_tier(ax.concepts[1]);
                out.push_back(make_gci(ax.concepts[0], ax.concepts[1], at));
                break;
            case AxiomKind::EquivalentClasses:
                for (const auto& c : ax.concepts) check_tier(c);
                for (std::size_t i = 0; i < ax.concepts.size(); ++i)
                    for (std::size_t j = 0; j < ax.concepts.size(); ++j)
                        if (i != j) out.push_back(make_gci(ax.concepts[i], ax.concepts[j], at));
                break;
            case AxiomKind::DisjointClasses:
                for (const auto& c : ax.concepts) check_tier(c);
                for (std::size_t i = 0; i < ax.concepts.size(); ++i)
                    for (std::size_t j = i + 1; j < ax.concepts.size(); ++j)
                        out.push_back(
                            make_gci(ax.concepts[i], make_not(ax.concepts[j]), at));
                break;
            case AxiomKind::Domain:
                check_tier(ax.concepts[0]);
                out.push_back(make_gci(make_some(ax.roles[0], make_top()), ax.concepts[0], at));
                break;
            case AxiomKind::Range:
                check_tier(ax.concepts[0]);
                out.push_back(make_gci(make_top(), make_only(ax.roles[0], ax.concepts[0]), at));
                break;
            default:
                break;
        }
    }
    return out;
}

}  // namespace sdl
