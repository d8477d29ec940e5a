#pragma once

// Deterministic random-structure generators shared by the property tests and
// the acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "sdl/ast.hpp"

namespace sdl::testgen {

struct ConceptGenOptions {
    std::vector<std::string> classNames = {"A", "B", "C"};
    std::vector<std::string> roleNames = {"r", "s"};
    int maxDepth = 3;
    bool withCardinalities = true;
    unsigned maxCardinality = 3;
    // restrict cardinality restrictions to roleNames[0..cardinalityRoles)
    std::size_t cardinalityRoles = SIZE_MAX;
};

inline ConceptPtr random_concept(std::mt19937& rng, const ConceptGenOptions& opt,
                                 int depth = 0) {
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto name = [&] { return opt.classNames[pick(opt.classNames.size())]; };
    auto role = [&] { return RoleExpr{opt.roleNames[pick(opt.roleNames.size())], false}; };

    int choices = depth >= opt.maxDepth ? 3 : (opt.withCardinalities ? 10 : 8);
    switch (rng() % choices) {
        case 0: return make_top();
        case 1: return make_bottom();
        case 2: return make_named(name());
        case 3: return make_not(random_concept(rng, opt, depth + 1));
        case 4:
        case 5: {
            std::vector<ConceptPtr> args;
            std::size_t n = 2 + pick(2);
            for (std::size_t i = 0; i < n; ++i)
                args.push_back(random_concept(rng, opt, depth + 1));
            return (rng() % 2) ? make_and(std::move(args)) : make_or(std::move(args));
        }
        case 6: return make_some(role(), random_concept(rng, opt, depth + 1));
        case 7: return make_only(role(), random_concept(rng, opt, depth + 1));
        default: {
            std::size_t limit = std::min(opt.cardinalityRoles, opt.roleNames.size());
            RoleExpr r{opt.roleNames[pick(limit)], false};
            unsigned n = static_cast<unsigned>(rng() % (opt.maxCardinality + 1));
            switch (rng() % 3) {
                case 0: return make_min(n, r);
                case 1: return make_max(n, r);
                default: return make_exact(n, r);
            }
        }
    }
}

/// Optional role axioms for the oracle-agreement suites: at most one
/// transitive, one inverse, one subrole axiom over roleNames[0], roleNames[1].
inline std::vector<Axiom> random_role_axioms(std::mt19937& rng,
                                             const std::vector<std::string>& roles,
                                             bool* transitiveOnFirst = nullptr) {
    std::vector<Axiom> out;
    if (roles.size() < 2) return out;
    bool trans = rng() % 4 == 0;
    bool inverse = rng() % 4 == 0;
    bool sub = rng() % 4 == 0;
    if (trans) {
        Axiom ax;
        ax.kind = AxiomKind::TransitiveProperty;
        ax.roles = {{roles[0], false}};
        out.push_back(std::move(ax));
    }
    if (inverse) {
        Axiom ax;
        ax.kind = AxiomKind::InverseProperties;
        ax.roles = {{roles[0], false}, {roles[1], false}};
        out.push_back(std::move(ax));
    }
    if (sub) {
        Axiom ax;
        ax.kind = AxiomKind::SubPropertyOf;
        ax.roles = {{roles[rng() % 2], false}, {roles[rng() % 2], false}};
        out.push_back(std::move(ax));
    }
    if (transitiveOnFirst) *transitiveOnFirst = trans;
    return out;
}

}  // namespace sdl::testgen
