#include <doctest.h>

#include <random>
#include <set>

#include "sdl/rolebox.hpp"

using namespace sdl;

namespace {

Axiom sub_prop(const std::string& a, const std::string& b) {
    Axiom ax;
    ax.kind = AxiomKind::SubPropertyOf;
    ax.roles = {{a, false}, {b, false}};
    return ax;
}
Axiom inv_props(const std::string& a, const std::string& b) {
    Axiom ax;
    ax.kind = AxiomKind::InverseProperties;
    ax.roles = {{a, false}, {b, false}};
    return ax;
}
Axiom equiv_props(const std::string& a, const std::string& b) {
    Axiom ax;
    ax.kind = AxiomKind::EquivalentProperties;
    ax.roles = {{a, false}, {b, false}};
    return ax;
}
Axiom transitive(const std::string& a) {
    Axiom ax;
    ax.kind = AxiomKind::TransitiveProperty;
    ax.roles = {{a, false}};
    return ax;
}

// Independent closure oracle over directed roles (name, inverted), computed
// as a plain fixpoint; nothing shared with RoleBox internals.
struct DirectedClosure {
    using D = std::pair<std::string, bool>;
    std::set<D> universe;
    std::set<std::pair<D, D>> sub;

    static D inv(const D& d) { return {d.first, !d.second}; }

    explicit DirectedClosure(const std::vector<Axiom>& axioms) {
        for (const auto& ax : axioms)
            for (const auto& r : ax.roles) {
                universe.insert({r.name, false});
                universe.insert({r.name, true});
            }
        auto add = [&](const D& a, const D& b) {
            sub.insert({a, b});
            sub.insert({inv(a), inv(b)});
        };
        for (const auto& ax : axioms) {
            D x{ax.roles[0].name, ax.roles[0].inverted};
            if (ax.kind == AxiomKind::SubPropertyOf) {
                add(x, {ax.roles[1].name, ax.roles[1].inverted});
            } else if (ax.kind == AxiomKind::EquivalentProperties) {
                D y{ax.roles[1].name, ax.roles[1].inverted};
                add(x, y);
                add(y, x);
            } else if (ax.kind == AxiomKind::InverseProperties) {
                D y{ax.roles[1].name, ax.roles[1].inverted};
                add(x, inv(y));
                add(inv(y), x);
            }
        }
        for (const auto& d : universe) sub.insert({d, d});
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::pair<D, D>> toAdd;
            for (const auto& [a, b] : sub)
                for (const auto& [c, d] : sub)
                    if (b == c && !sub.count({a, d})) toAdd.push_back({a, d});
            for (auto& p : toAdd) changed |= sub.insert(p).second;
        }
    }
};

}  // namespace

TEST_CASE("subproperty chains close transitively") {
    RoleBox rb = RoleBox::build({sub_prop("r", "s"), sub_prop("s", "t")});
    CHECK(rb.is_sub("r", "t"));
    CHECK(rb.is_sub("r", "r"));
    CHECK(!rb.is_sub("t", "r"));
}

TEST_CASE("no axioms closes to identity pairs only") {
    RoleBox rb = RoleBox::build({}, {"r", "s"});
    for (const auto& a : rb.all_roles())
        for (const auto& b : rb.all_roles())
            CHECK(rb.is_sub(a, b) == (a == b));
}

TEST_CASE("inverse of a superproperty subsumes the inverse image") {
    // InverseProperties(r, s) with SubPropertyOf(r, t): s <= inv(t)
    RoleBox rb = RoleBox::build({inv_props("r", "s"), sub_prop("r", "t")});
    std::string invT = rb.normalize({"t", true});
    CHECK(rb.is_sub("s", invT));

    DirectedClosure oracle({inv_props("r", "s"), sub_prop("r", "t")});
    CHECK(oracle.sub.count({{"s", false}, {"t", true}}) == 1);
}

TEST_CASE("closure agrees with the directed-pair oracle on random role boxes") {
    std::mt19937 rng(77);
    const std::vector<std::string> names = {"p", "q", "r"};
    for (int round = 0; round < 300; ++round) {
        std::vector<Axiom> axioms;
        int n = static_cast<int>(rng() % 4) + 1;
        for (int i = 0; i < n; ++i) {
            const std::string& a = names[rng() % names.size()];
            const std::string& b = names[rng() % names.size()];
            switch (rng() % 4) {
                case 0: axioms.push_back(sub_prop(a, b)); break;
                case 1: axioms.push_back(equiv_props(a, b)); break;
                case 2: axioms.push_back(inv_props(a, b)); break;
                default: axioms.push_back(transitive(a)); break;
            }
        }
        RoleBox rb = RoleBox::build(axioms);
        DirectedClosure oracle(axioms);
        for (const auto& a : oracle.universe)
            for (const auto& b : oracle.universe) {
                bool expect = oracle.sub.count({a, b}) > 0;
                bool got = rb.is_sub(rb.normalize({a.first, a.second}),
                                     rb.normalize({b.first, b.second}));
                CHECK(got == expect);
            }
    }
}

TEST_CASE("closure pairs respect the inverse invariant") {
    RoleBox rb = RoleBox::build({sub_prop("r", "s"), inv_props("s", "u"), equiv_props("u", "v")});
    for (const auto& a : rb.all_roles())
        for (const auto& b : rb.all_roles())
            CHECK(rb.is_sub(a, b) == rb.is_sub(rb.inverse(a), rb.inverse(b)));
}

TEST_CASE("closing the closure changes nothing") {
    std::vector<Axiom> axioms = {sub_prop("r", "s"), sub_prop("s", "t"), inv_props("r", "u"),
                                 transitive("t")};
    RoleBox rb = RoleBox::build(axioms);
    std::vector<Axiom> again;
    for (const auto& [a, b] : rb.closure_pairs()) again.push_back(sub_prop(a, b));
    for (const auto& [a, b] : rb.inverse_map())
        if (a <= b) again.push_back(inv_props(a, b));
    for (const auto& t : rb.transitive_roles()) again.push_back(transitive(t));
    RoleBox rb2 = RoleBox::build(again);
    CHECK(rb2.closure_pairs() == rb.closure_pairs());
    CHECK(rb2.transitive_roles() == rb.transitive_roles());
}

TEST_CASE("synthetic inverses are involutions and transitivity spreads to them") {
    CHECK(synthetic_inverse(synthetic_inverse("r")) == "r");
    RoleBox rb = RoleBox::build({transitive("r"), sub_prop("r", "s")});
    std::string invR = rb.normalize({"r", true});
    CHECK(is_synthetic_role(invR));
    CHECK(rb.is_transitive(invR));
    CHECK(!rb.is_simple("r"));
    CHECK(!rb.is_simple("s"));  // transitive subrole r
}
