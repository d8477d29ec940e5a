#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdl/ast.hpp"

namespace sdl {

/// Namespace for inverse names synthesized for roles with no asserted inverse.
/// Hidden from all reports.
extern const std::string kSyntheticInversePrefix;

/// Synthetic inverse naming; an involution on role names.
std::string synthetic_inverse(const std::string& roleName);

bool is_synthetic_role(const std::string& roleName);

/// Role hierarchy after closure. Every directed role is canonicalized to a
/// plain name: `r` stays `r`, `inverse r` becomes its (asserted or synthetic)
/// inverse name. The closure is reflexive and transitive and satisfies
/// r <= s  iff  inv(r) <= inv(s).
class RoleBox {
public:
    /// `axioms` may contain any axiom kinds; only role axioms are read.
    /// `usedRoleNames` registers roles that occur in concepts but carry no
    /// role axioms.
    static RoleBox build(const std::vector<Axiom>& axioms,
                         const std::set<std::string>& usedRoleNames = {});

    /// Canonical name for a possibly-inverted role expression. Roles never
    /// registered are handled positionally (their inverse is synthetic).
    std::string normalize(const RoleExpr& role) const;

    /// Inverse of a canonical role name.
    std::string inverse(const std::string& roleName) const;

    /// sub <= sup in the closed hierarchy.
    bool is_sub(const std::string& sub, const std::string& sup) const;

    bool is_transitive(const std::string& roleName) const;

    /// Simple = no transitive subrole (itself included). Cardinality
    /// restrictions are only admitted on simple roles.
    bool is_simple(const std::string& roleName) const;

    /// All registered canonical role names, sorted (synthetics included).
    const std::vector<std::string>& all_roles() const { return allRoles_; }

    /// Subroles of `sup` within the registered set, sorted.
    std::vector<std::string> subroles_of(const std::string& sup) const;

    const std::set<std::pair<std::string, std::string>>& closure_pairs() const { return subPairs_; }
    const std::map<std::string, std::string>& inverse_map() const { return inverseMap_; }
    const std::set<std::string>& transitive_roles() const { return transitiveRoles_; }

private:
    std::map<std::string, std::string> inverseMap_;
    std::set<std::pair<std::string, std::string>> subPairs_;
    std::set<std::string> transitiveRoles_;
    std::vector<std::string> allRoles_;
};

}  // namespace sdl
