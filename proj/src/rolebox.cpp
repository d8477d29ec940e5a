#include "sdl/rolebox.hpp"

#include <algorithm>

namespace sdl {

const std::string kSyntheticInversePrefix = "urn:sdl:inv#";

std::string synthetic_inverse(const std::string& roleName) {
    if (is_synthetic_role(roleName)) return roleName.substr(kSyntheticInversePrefix.size());
    return kSyntheticInversePrefix + roleName;
}

bool is_synthetic_role(const std::string& roleName) {
    return roleName.compare(0, kSyntheticInversePrefix.size(), kSyntheticInversePrefix) == 0;
}

RoleBox RoleBox::build(const std::vector<Axiom>& axioms, const std::set<std::string>& usedRoleNames) {
    RoleBox rb;

    std::set<std::string> names(usedRoleNames);
    for (const auto& ax : axioms) {
        for (const auto& r : ax.roles) names.insert(r.name);
        if (ax.kind == AxiomKind::Declaration && ax.declKind == DeclKind::ObjectProperty)
            names.insert(ax.names[0]);
    }

    // Asserted inverses first; conflicts (a role with two asserted inverses)
    // degrade into equivalences between the competing inverses.
    std::vector<std::pair<std::string, std::string>> equivalences;
    auto claim_inverse = [&](const std::string& a, const std::string& b) {
        auto ia = rb.inverseMap_.find(a);
        auto ib = rb.inverseMap_.find(b);
        if (ia == rb.inverseMap_.end() && ib == rb.inverseMap_.end()) {
            rb.inverseMap_[a] = b;
            rb.inverseMap_[b] = a;
        } else if (ia != rb.inverseMap_.end() && ia->second != b) {
            equivalences.emplace_back(ia->second, b);
        } else if (ib != rb.inverseMap_.end() && ib->second != a) {
            equivalences.emplace_back(ib->second, a);
        }
    };
    for (const auto& ax : axioms) {
        if (ax.kind != AxiomKind::InverseProperties) continue;
        // inv(x) == y; when x or y is itself inverted this reduces to an
        // equivalence or a plain inverse pairing.
        const RoleExpr& x = ax.roles[0];
        const RoleExpr& y = ax.roles[1];
        if (!x.inverted && !y.inverted) claim_inverse(x.name, y.name);
        else if (x.inverted && y.inverted) claim_inverse(y.name, x.name);
        else if (x.inverted && !y.inverted) equivalences.emplace_back(x.name, y.name);
        else equivalences.emplace_back(x.name, y.name);
    }

    // Synthetic inverses for everything unpaired.
    for (const auto& n : names) {
        if (!rb.inverseMap_.count(n)) {
            std::string inv = synthetic_inverse(n);
            rb.inverseMap_[n] = inv;
            rb.inverseMap_[inv] = n;
        }
    }
    for (const auto& [a, b] : rb.inverseMap_) names.insert(a), names.insert(b);
    rb.allRoles_.assign(names.begin(), names.end());

    auto canon = [&](const RoleExpr& r) {
        if (!r.inverted) return r.name;
        auto it = rb.inverseMap_.find(r.name);
        return it != rb.inverseMap_.end() ? it->second : synthetic_inverse(r.name);
    };

    // Seed subsumption pairs; each asserted pair also holds between inverses.
    std::set<std::pair<std::string, std::string>>& pairs = rb.subPairs_;
    auto add_pair = [&](const std::string& sub, const std::string& sup) {
        pairs.emplace(sub, sup);
        pairs.emplace(rb.inverse(sub), rb.inverse(sup));
    };
    for (const auto& n : rb.allRoles_) pairs.emplace(n, n);
    for (const auto& ax : axioms) {
        if (ax.kind == AxiomKind::SubPropertyOf) {
            add_pair(canon(ax.roles[0]), canon(ax.roles[1]));
        } else if (ax.kind == AxiomKind::EquivalentProperties) {
            for (std::size_t i = 0; i + 1 < ax.roles.size(); ++i) {
                add_pair(canon(ax.roles[i]), canon(ax.roles[i + 1]));
                add_pair(canon(ax.roles[i + 1]), canon(ax.roles[i]));
            }
        }
    }
    for (const auto& [a, b] : equivalences) {
        add_pair(a, b);
        add_pair(b, a);
    }

    // Transitive closure (small sets; fixpoint is fine).
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<std::string, std::string>> toAdd;
        for (const auto& [a, b] : pairs)
            for (const auto& [c, d] : pairs)
                if (b == c && !pairs.count({a, d})) toAdd.emplace_back(a, d);
        for (auto& p : toAdd) changed |= pairs.insert(std::move(p)).second;
    }

    for (const auto& ax : axioms) {
        if (ax.kind != AxiomKind::TransitiveProperty) continue;
        std::string r = canon(ax.roles[0]);
        rb.transitiveRoles_.insert(r);
        rb.transitiveRoles_.insert(rb.inverse(r));
    }
    return rb;
}

std::string RoleBox::normalize(const RoleExpr& role) const {
    if (!role.inverted) return role.name;
    return inverse(role.name);
}

std::string RoleBox::inverse(const std::string& roleName) const {
    auto it = inverseMap_.find(roleName);
    return it != inverseMap_.end() ? it->second : synthetic_inverse(roleName);
}

bool RoleBox::is_sub(const std::string& sub, const std::string& sup) const {
    if (sub == sup) return true;
    return subPairs_.count({sub, sup}) > 0;
}

bool RoleBox::is_transitive(const std::string& roleName) const {
    return transitiveRoles_.count(roleName) > 0;
}

bool RoleBox::is_simple(const std::string& roleName) const {
    if (is_transitive(roleName)) return false;
    for (const auto& [a, b] : subPairs_)
        if (b == roleName && is_transitive(a)) return false;
    return true;
}

std::vector<std::string> RoleBox::subroles_of(const std::string& sup) const {
    std::vector<std::string> out;
    for (const auto& [a, b] : subPairs_)
        if (b == sup) out.push_back(a);
    if (out.empty() || !std::binary_search(out.begin(), out.end(), sup)) {
        // reflexive pair may be absent for unregistered roles
        out.push_back(sup);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sdl
