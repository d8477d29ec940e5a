#include "sdl/nnf.hpp"

#include "sdl/errors.hpp"
#include "sdl/render.hpp"

namespace sdl {

namespace {

[[noreturn]] void reject_nominal(const ConceptExpr& c) {
    throw UnsupportedFeature("nominal construct '" + render(c) +
                             "' is parse-only; it cannot be reasoned over");
}

}  // namespace

ConceptPtr nnf(const ConceptPtr& c) {
    switch (c->kind) {
        case ConceptKind::Named:
        case ConceptKind::Top:
        case ConceptKind::Bottom:
            return c;
        case ConceptKind::And:
        case ConceptKind::Or: {
            std::vector<ConceptPtr> args;
            args.reserve(c->args.size());
            for (const auto& a : c->args) args.push_back(nnf(a));
            return c->kind == ConceptKind::And ? make_and(std::move(args))
                                               : make_or(std::move(args));
        }
        case ConceptKind::Not:
            return nnf_negated(c->args[0]);
        case ConceptKind::Some:
            return make_some(c->role, nnf(c->args[0]));
        case ConceptKind::Only:
            return make_only(c->role, nnf(c->args[0]));
        case ConceptKind::Min:
            return c->number == 0 ? make_top() : c;
        case ConceptKind::Max:
            return c;
        case ConceptKind::Exact:
            if (c->number == 0) return make_max(0, c->role);
            return make_and({make_min(c->number, c->role), make_max(c->number, c->role)});
        case ConceptKind::OneOf:
        case ConceptKind::HasValue:
            reject_nominal(*c);
    }
    return c;
}

ConceptPtr nnf_negated(const ConceptPtr& c) {
    switch (c->kind) {
        case ConceptKind::Named:
            return make_not(c);
        case ConceptKind::Top:
            return make_bottom();
        case ConceptKind::Bottom:
            return make_top();
        case ConceptKind::And:
        case ConceptKind::Or: {
            std::vector<ConceptPtr> args;
            args.reserve(c->args.size());
            for (const auto& a : c->args) args.push_back(nnf_negated(a));
            // De Morgan
            return c->kind == ConceptKind::And ? make_or(std::move(args))
                                               : make_and(std::move(args));
        }
        case ConceptKind::Not:
            return nnf(c->args[0]);
        case ConceptKind::Some:
            return make_only(c->role, nnf_negated(c->args[0]));
        case ConceptKind::Only:
            return make_some(c->role, nnf_negated(c->args[0]));
        case ConceptKind::Min:
            return c->number == 0 ? make_bottom() : make_max(c->number - 1, c->role);
        case ConceptKind::Max:
            return make_min(c->number + 1, c->role);
        case ConceptKind::Exact:
            if (c->number == 0) return make_min(1, c->role);
            return make_or({make_max(c->number - 1, c->role), make_min(c->number + 1, c->role)});
        case ConceptKind::OneOf:
        case ConceptKind::HasValue:
            reject_nominal(*c);
    }
    return c;
}

}  // namespace sdl
