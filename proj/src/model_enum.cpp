#include "sdl/model_enum.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sdl/errors.hpp"
#include "sdl/render.hpp"

namespace sdl {

namespace {

// Concept tree with name lookups resolved to dense indices, so the inner
// enumeration loop never touches strings.
struct Compiled {
    ConceptKind kind = ConceptKind::Top;
    int classIdx = -1;             // Named
    int roleIdx = -1;              // restrictions; -1 = role outside signature
    bool roleInverted = false;
    unsigned number = 0;
    std::vector<Compiled> args;
};

struct CompiledAxiom {
    AxiomKind kind;
    std::vector<Compiled> concepts;
    std::vector<std::pair<int, bool>> roles;  // (index, inverted)
    int maxClassIdx = -1;                     // largest class index mentioned
};

struct Search {
    int m = 1;
    std::uint32_t full = 1;
    std::vector<std::string> classNames, roleNames;
    std::vector<std::uint32_t> classMask, roleMask;
    std::vector<CompiledAxiom> classAxioms;   // SubClassOf/Equivalent/Disjoint/Domain/Range
    std::vector<CompiledAxiom> roleFilters;   // SubPropertyOf/EquivalentProperties/Inverse/Transitive
    std::vector<int> derivedFrom;             // roleIdx -> source role (transpose), or -1
    Compiled query;
    // classAxioms grouped by the last class index they need (-1 = none)
    std::vector<std::vector<const CompiledAxiom*>> axiomsByLastClass;

    std::size_t maxModels = 16;
    std::vector<Interpretation>* out = nullptr;

    std::uint32_t row(int role, int d) const { return (roleMask[role] >> (d * m)) & full; }
    std::uint32_t col(int role, int e) const {
        std::uint32_t c = 0;
        for (int d = 0; d < m; ++d)
            if (roleMask[role] & (1u << (d * m + e))) c |= 1u << d;
        return c;
    }
    std::uint32_t transpose(std::uint32_t mask) const {
        std::uint32_t t = 0;
        for (int d = 0; d < m; ++d)
            for (int e = 0; e < m; ++e)
                if (mask & (1u << (d * m + e))) t |= 1u << (e * m + d);
        return t;
    }
    std::uint32_t role_mask_of(int idx, bool inverted) const {
        std::uint32_t mask = idx < 0 ? 0 : roleMask[idx];
        return inverted ? transpose(mask) : mask;
    }
    std::uint32_t role_row(const Compiled& c, int d) const {
        if (c.roleIdx < 0) return 0;
        return c.roleInverted ? col(c.roleIdx, d) : row(c.roleIdx, d);
    }

    std::uint32_t eval(const Compiled& c) const {
        switch (c.kind) {
            case ConceptKind::Named: return classMask[c.classIdx];
            case ConceptKind::Top: return full;
            case ConceptKind::Bottom: return 0;
            case ConceptKind::And: {
                std::uint32_t v = full;
                for (const auto& a : c.args) v &= eval(a);
                return v;
            }
            case ConceptKind::Or: {
                std::uint32_t v = 0;
                for (const auto& a : c.args) v |= eval(a);
                return v;
            }
            case ConceptKind::Not: return full & ~eval(c.args[0]);
            case ConceptKind::Some: {
                std::uint32_t filler = eval(c.args[0]);
                std::uint32_t v = 0;
                for (int d = 0; d < m; ++d)
                    if (role_row(c, d) & filler) v |= 1u << d;
                return v;
            }
            case ConceptKind::Only: {
                std::uint32_t filler = eval(c.args[0]);
                std::uint32_t v = 0;
                for (int d = 0; d < m; ++d)
                    if ((role_row(c, d) & ~filler & full) == 0) v |= 1u << d;
                return v;
            }
            case ConceptKind::Min:
            case ConceptKind::Max:
            case ConceptKind::Exact: {
                std::uint32_t v = 0;
                for (int d = 0; d < m; ++d) {
                    unsigned n = static_cast<unsigned>(std::popcount(role_row(c, d)));
                    bool ok = c.kind == ConceptKind::Min   ? n >= c.number
                              : c.kind == ConceptKind::Max ? n <= c.number
                                                           : n == c.number;
                    if (ok) v |= 1u << d;
                }
                return v;
            }
            default:
                return 0;
        }
    }

    bool axiom_holds(const CompiledAxiom& ax) const {
        switch (ax.kind) {
            case AxiomKind::SubClassOf:
                return (eval(ax.concepts[0]) & ~eval(ax.concepts[1]) & full) == 0;
            case AxiomKind::EquivalentClasses: {
                std::uint32_t first = eval(ax.concepts[0]);
                for (std::size_t i = 1; i < ax.concepts.size(); ++i)
                    if (eval(ax.concepts[i]) != first) return false;
                return true;
            }
            case AxiomKind::DisjointClasses:
                for (std::size_t i = 0; i < ax.concepts.size(); ++i)
                    for (std::size_t j = i + 1; j < ax.concepts.size(); ++j)
                        if (eval(ax.concepts[i]) & eval(ax.concepts[j])) return false;
                return true;
            case AxiomKind::Domain: {
                std::uint32_t dom = eval(ax.concepts[0]);
                for (int d = 0; d < m; ++d) {
                    std::uint32_t r = ax.roles[0].second ? col(ax.roles[0].first, d)
                                                         : row(ax.roles[0].first, d);
                    if (r && !(dom & (1u << d))) return false;
                }
                return true;
            }
            case AxiomKind::Range: {
                std::uint32_t range = eval(ax.concepts[0]);
                for (int d = 0; d < m; ++d) {
                    std::uint32_t r = ax.roles[0].second ? col(ax.roles[0].first, d)
                                                         : row(ax.roles[0].first, d);
                    if (r & ~range & full) return false;
                }
                return true;
            }
            default:
                return true;
        }
    }

    bool transitive_mask(std::uint32_t mask) const {
        for (int i = 0; i < m; ++i) {
            std::uint32_t ri = (mask >> (i * m)) & full;
            std::uint32_t reach = 0;
            for (int j = 0; j < m; ++j)
                if (ri & (1u << j)) reach |= (mask >> (j * m)) & full;
            if (reach & ~ri) return false;
        }
        return true;
    }

    bool role_filters_hold(int upto) const {
        auto ready = [&](const std::pair<int, bool>& r) { return r.first < upto; };
        for (const auto& f : roleFilters) {
            switch (f.kind) {
                case AxiomKind::TransitiveProperty:
                    if (ready(f.roles[0]) &&
                        !transitive_mask(role_mask_of(f.roles[0].first, f.roles[0].second)))
                        return false;
                    break;
                case AxiomKind::SubPropertyOf:
                    if (ready(f.roles[0]) && ready(f.roles[1]) &&
                        (role_mask_of(f.roles[0].first, f.roles[0].second) &
                         ~role_mask_of(f.roles[1].first, f.roles[1].second)))
                        return false;
                    break;
                case AxiomKind::EquivalentProperties: {
                    bool all = true;
                    for (const auto& r : f.roles) all = all && ready(r);
                    if (!all) break;
                    std::uint32_t first = role_mask_of(f.roles[0].first, f.roles[0].second);
                    for (std::size_t i = 1; i < f.roles.size(); ++i)
                        if (role_mask_of(f.roles[i].first, f.roles[i].second) != first)
                            return false;
                    break;
                }
                case AxiomKind::InverseProperties:
                    if (ready(f.roles[0]) && ready(f.roles[1]) &&
                        role_mask_of(f.roles[0].first, f.roles[0].second) !=
                            transpose(role_mask_of(f.roles[1].first, f.roles[1].second)))
                        return false;
                    break;
                default:
                    break;
            }
        }
        return true;
    }

    bool record_model() {
        Interpretation interp;
        interp.size = m;
        for (std::size_t i = 0; i < classNames.size(); ++i)
            interp.classExt[classNames[i]] = classMask[i];
        for (std::size_t i = 0; i < roleNames.size(); ++i)
            interp.roleExt[roleNames[i]] = roleMask[i];
        out->push_back(std::move(interp));
        return out->size() >= maxModels;
    }

    bool enumerate_roles(int roleIdx) {
        if (roleIdx == static_cast<int>(roleNames.size())) {
            for (const CompiledAxiom* ax : axiomsByLastClass[0])  // class-free axioms
                if (!axiom_holds(*ax)) return false;
            return enumerate_classes(0);
        }
        if (derivedFrom[roleIdx] >= 0 && derivedFrom[roleIdx] < roleIdx) {
            roleMask[roleIdx] = transpose(roleMask[derivedFrom[roleIdx]]);
            if (!role_filters_hold(roleIdx + 1)) return false;
            return enumerate_roles(roleIdx + 1);
        }
        std::uint32_t space = 1u << (m * m);
        for (std::uint32_t mask = 0; mask < space; ++mask) {
            roleMask[roleIdx] = mask;
            if (!role_filters_hold(roleIdx + 1)) continue;
            if (enumerate_roles(roleIdx + 1)) return true;
        }
        return false;
    }

    bool enumerate_classes(int classIdx) {
        if (classIdx == static_cast<int>(classNames.size())) {
            if (eval(query) == 0) return false;
            return record_model();
        }
        std::uint32_t space = 1u << m;
        for (std::uint32_t mask = 0; mask < space; ++mask) {
            classMask[classIdx] = mask;
            bool ok = true;
            for (const CompiledAxiom* ax : axiomsByLastClass[classIdx + 1])
                if (!axiom_holds(*ax)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (enumerate_classes(classIdx + 1)) return true;
        }
        return false;
    }
};

void collect_signature(const ConceptExpr& c, std::set<std::string>& classes,
                       std::set<std::string>& roles) {
    if (c.kind == ConceptKind::Named) classes.insert(c.name);
    switch (c.kind) {
        case ConceptKind::Some:
        case ConceptKind::Only:
        case ConceptKind::Min:
        case ConceptKind::Max:
        case ConceptKind::Exact:
        case ConceptKind::HasValue:
            roles.insert(c.role.name);
            break;
        default:
            break;
    }
    for (const auto& a : c.args) collect_signature(*a, classes, roles);
}

struct Compiler {
    std::map<std::string, int> classIndex, roleIndex;

    Compiled compile(const ConceptExpr& c, int& maxClassIdx) const {
        if (c.kind == ConceptKind::OneOf || c.kind == ConceptKind::HasValue)
            throw UnsupportedFeature("nominal construct '" + render(c) +
                                     "' is outside the oracle tier");
        Compiled out;
        out.kind = c.kind;
        out.number = c.number;
        if (c.kind == ConceptKind::Named) {
            out.classIdx = classIndex.at(c.name);
            maxClassIdx = std::max(maxClassIdx, out.classIdx);
        }
        switch (c.kind) {
            case ConceptKind::Some:
            case ConceptKind::Only:
            case ConceptKind::Min:
            case ConceptKind::Max:
            case ConceptKind::Exact: {
                auto it = roleIndex.find(c.role.name);
                out.roleIdx = it == roleIndex.end() ? -1 : it->second;
                out.roleInverted = c.role.inverted;
                break;
            }
            default:
                break;
        }
        for (const auto& a : c.args) out.args.push_back(compile(*a, maxClassIdx));
        return out;
    }
};

}  // namespace

std::vector<Interpretation> enumerate_models(const std::vector<Axiom>& axioms, const ConceptPtr& c,
                                             int maxDomain, std::size_t maxModels,
                                             int budgetBits) {
    std::set<std::string> classes, roles;
    collect_signature(*c, classes, roles);

    std::vector<const Axiom*> classAxiomPtrs, roleAxiomPtrs;
    for (const auto& ax : axioms) {
        switch (ax.kind) {
            case AxiomKind::SubClassOf:
            case AxiomKind::EquivalentClasses:
            case AxiomKind::DisjointClasses:
                classAxiomPtrs.push_back(&ax);
                for (const auto& cc : ax.concepts) collect_signature(*cc, classes, roles);
                break;
            case AxiomKind::Domain:
            case AxiomKind::Range:
                classAxiomPtrs.push_back(&ax);
                collect_signature(*ax.concepts[0], classes, roles);
                roles.insert(ax.roles[0].name);
                break;
            case AxiomKind::SubPropertyOf:
            case AxiomKind::EquivalentProperties:
            case AxiomKind::InverseProperties:
            case AxiomKind::TransitiveProperty:
                roleAxiomPtrs.push_back(&ax);
                for (const auto& r : ax.roles) roles.insert(r.name);
                break;
            default:
                break;  // declarations, annotations, ABox: not the oracle's business
        }
    }

    std::vector<Interpretation> out;
    Search s;
    s.classNames.assign(classes.begin(), classes.end());
    s.roleNames.assign(roles.begin(), roles.end());
    s.maxModels = maxModels;
    s.out = &out;

    Compiler comp;
    for (const auto& nm : s.classNames)
        comp.classIndex[nm] = static_cast<int>(comp.classIndex.size());
    for (const auto& nm : s.roleNames) comp.roleIndex[nm] = static_cast<int>(comp.roleIndex.size());

    int queryMax = -1;
    s.query = comp.compile(*c, queryMax);

    s.axiomsByLastClass.resize(s.classNames.size() + 1);
    std::vector<CompiledAxiom> compiledStore;
    compiledStore.reserve(classAxiomPtrs.size());
    for (const Axiom* ax : classAxiomPtrs) {
        CompiledAxiom ca;
        ca.kind = ax->kind;
        ca.maxClassIdx = -1;
        for (const auto& cc : ax->concepts) ca.concepts.push_back(comp.compile(*cc, ca.maxClassIdx));
        for (const auto& r : ax->roles)
            ca.roles.emplace_back(comp.roleIndex.at(r.name), r.inverted);
        compiledStore.push_back(std::move(ca));
    }
    s.classAxioms = std::move(compiledStore);
    for (const auto& ca : s.classAxioms)
        s.axiomsByLastClass[static_cast<std::size_t>(ca.maxClassIdx + 1)].push_back(&ca);

    for (const Axiom* ax : roleAxiomPtrs) {
        CompiledAxiom ca;
        ca.kind = ax->kind;
        for (const auto& r : ax->roles)
            ca.roles.emplace_back(comp.roleIndex.at(r.name), r.inverted);
        s.roleFilters.push_back(std::move(ca));
    }

    // Roles pinned as the transpose of another enumerate nothing themselves.
    s.derivedFrom.assign(s.roleNames.size(), -1);
    for (const auto& f : s.roleFilters) {
        if (f.kind != AxiomKind::InverseProperties) continue;
        if (f.roles[0].second || f.roles[1].second) continue;
        int a = f.roles[0].first, b = f.roles[1].first;
        if (a == b) continue;
        int later = std::max(a, b), earlier = std::min(a, b);
        if (s.derivedFrom[later] < 0) s.derivedFrom[later] = earlier;
    }

    for (int m = 1; m <= maxDomain; ++m) {
        long long bits = static_cast<long long>(s.classNames.size()) * m;
        for (std::size_t r = 0; r < s.roleNames.size(); ++r)
            if (s.derivedFrom[r] < 0) bits += static_cast<long long>(m) * m;
        if (bits > budgetBits)
            throw ResourceLimit("finite-model search space is 2^" + std::to_string(bits) +
                                " at domain size " + std::to_string(m) +
                                "; restrict the signature or lower maxDomain");
        s.m = m;
        s.full = (1u << m) - 1;
        s.classMask.assign(s.classNames.size(), 0);
        s.roleMask.assign(s.roleNames.size(), 0);
        if (s.enumerate_roles(0)) break;
    }
    return out;
}

std::vector<Interpretation> enumerate_models(const KnowledgeBase& kb, const ConceptPtr& c,
                                             int maxDomain, std::size_t maxModels,
                                             int budgetBits) {
    return enumerate_models(kb.axioms(), c, maxDomain, maxModels, budgetBits);
}

bool oracle_satisfiable(const std::vector<Axiom>& axioms, const ConceptPtr& c, int maxDomain,
                        int budgetBits) {
    return !enumerate_models(axioms, c, maxDomain, 1, budgetBits).empty();
}

}  // namespace sdl
