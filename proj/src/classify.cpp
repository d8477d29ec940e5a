#include "sdl/classify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "sdl/errors.hpp"
#include "sdl/render.hpp"

namespace sdl {

int Taxonomy::group_of(const std::string& name) const {
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (std::find(groups[i].begin(), groups[i].end(), name) != groups[i].end())
            return static_cast<int>(i);
    return -1;
}

bool Taxonomy::below(int subGroup, int superGroup) const {
    if (subGroup == superGroup) return true;
    std::vector<int> stack{subGroup};
    std::set<int> seen{subGroup};
    while (!stack.empty()) {
        int g = stack.back();
        stack.pop_back();
        for (const auto& [from, to] : edges) {
            if (from != g || seen.count(to)) continue;
            if (to == superGroup) return true;
            seen.insert(to);
            stack.push_back(to);
        }
    }
    return false;
}

bool Taxonomy::below(const std::string& sub, const std::string& super) const {
    int a = group_of(sub), b = group_of(super);
    if (a < 0 || b < 0) return false;
    return below(a, b);
}

namespace {

// reachability over told subclass edges
std::map<std::string, std::set<std::string>> told_closure(const KnowledgeBase& kb) {
    auto edges = kb.told_hierarchy();
    std::map<std::string, std::set<std::string>> reach;
    for (const auto& [start, _] : edges) {
        std::vector<std::string> stack{start};
        std::set<std::string>& r = reach[start];
        while (!stack.empty()) {
            std::string n = stack.back();
            stack.pop_back();
            auto it = edges.find(n);
            if (it == edges.end()) continue;
            for (const auto& next : it->second)
                if (r.insert(next).second) stack.push_back(next);
        }
    }
    return reach;
}

}  // namespace

Taxonomy classify(const Reasoner& reasoner) {
    if (!reasoner.is_consistent().satisfiable)
        throw InconsistentKB(
            "cannot classify an inconsistent knowledge base (every subsumption holds)");

    const auto& classSet = reasoner.kb().signature().classNames;
    std::vector<std::string> unsat, sat;
    for (const auto& name : classSet) {
        if (reasoner.is_satisfiable(make_named(name)).satisfiable)
            sat.push_back(name);
        else
            unsat.push_back(name);
    }

    auto told = told_closure(reasoner.kb());
    auto told_implies = [&](const std::string& a, const std::string& b) {
        auto it = told.find(a);
        return it != told.end() && it->second.count(b) > 0;
    };

    // elements: 0 = Top, 1..n = satisfiable classes, n+1 = Bottom
    int n = static_cast<int>(sat.size());
    int TOP = 0, BOTTOM = n + 1;
    std::vector<std::vector<bool>> rel(n + 2, std::vector<bool>(n + 2, false));
    for (int i = 0; i < n + 2; ++i) {
        rel[i][i] = true;
        rel[i][TOP] = true;
        rel[BOTTOM][i] = true;
    }
    for (int i = 0; i < n; ++i) {
        // class equivalent to owl:Thing?
        rel[TOP][i + 1] = reasoner.subsumes(make_top(), make_named(sat[i]));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            rel[i + 1][j + 1] = told_implies(sat[i], sat[j]) ||
                                reasoner.subsumes(make_named(sat[i]), make_named(sat[j]));
        }
    }

    // group: equivalence by mutual subsumption
    std::vector<int> groupOf(n + 2, -1);
    std::vector<std::vector<int>> memberIdx;
    for (int i = 0; i < n + 2; ++i) {
        if (groupOf[i] >= 0) continue;
        int g = static_cast<int>(memberIdx.size());
        memberIdx.push_back({i});
        groupOf[i] = g;
        for (int j = i + 1; j < n + 2; ++j)
            if (groupOf[j] < 0 && rel[i][j] && rel[j][i]) {
                groupOf[j] = g;
                memberIdx[g].push_back(j);
            }
    }

    auto element_name = [&](int e) -> std::string {
        if (e == TOP) return "owl:Thing";
        if (e == BOTTOM) return "owl:Nothing";
        return sat[e - 1];
    };

    int groupCount = static_cast<int>(memberIdx.size());
    std::vector<std::vector<std::string>> members(groupCount);
    for (int g = 0; g < groupCount; ++g) {
        for (int e : memberIdx[g]) members[g].push_back(element_name(e));
        if (groupOf[BOTTOM] == g) members[g].insert(members[g].end(), unsat.begin(), unsat.end());
        std::sort(members[g].begin(), members[g].end());
    }

    // sort groups by least member
    std::vector<int> order(groupCount);
    for (int g = 0; g < groupCount; ++g) order[g] = g;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return members[a].front() < members[b].front(); });
    std::vector<int> newIdx(groupCount);
    for (int pos = 0; pos < groupCount; ++pos) newIdx[order[pos]] = pos;

    Taxonomy tax;
    tax.groups.resize(groupCount);
    for (int g = 0; g < groupCount; ++g) tax.groups[newIdx[g]] = std::move(members[g]);
    tax.top = newIdx[groupOf[TOP]];
    tax.bottom = newIdx[groupOf[BOTTOM]];

    // group-level subsumption, then transitive reduction
    std::vector<std::vector<bool>> gsub(groupCount, std::vector<bool>(groupCount, false));
    for (int i = 0; i < n + 2; ++i)
        for (int j = 0; j < n + 2; ++j)
            if (rel[i][j]) gsub[newIdx[groupOf[i]]][newIdx[groupOf[j]]] = true;
    for (int a = 0; a < groupCount; ++a) {
        for (int b = 0; b < groupCount; ++b) {
            if (a == b || !gsub[a][b]) continue;
            bool direct = true;
            for (int w = 0; w < groupCount; ++w) {
                if (w == a || w == b) continue;
                if (gsub[a][w] && gsub[w][b]) {
                    direct = false;
                    break;
                }
            }
            if (direct) tax.edges.emplace_back(a, b);
        }
    }
    std::sort(tax.edges.begin(), tax.edges.end());
    return tax;
}

std::map<std::string, ClashInfo> unsatisfiable_classes(const Reasoner& reasoner) {
    std::map<std::string, ClashInfo> out;
    for (const auto& name : reasoner.kb().signature().classNames) {
        SatResult r = reasoner.is_satisfiable(make_named(name));
        if (!r.satisfiable) out.emplace(name, std::move(*r.clash));
    }
    return out;
}

bool entails(const Reasoner& reasoner, const Axiom& axiom) {
    switch (axiom.kind) {
        case AxiomKind::SubClassOf:
            return reasoner.subsumes(axiom.concepts[0], axiom.concepts[1]);
        case AxiomKind::EquivalentClasses:
            for (std::size_t i = 0; i + 1 < axiom.concepts.size(); ++i) {
                if (!reasoner.subsumes(axiom.concepts[i], axiom.concepts[i + 1])) return false;
                if (!reasoner.subsumes(axiom.concepts[i + 1], axiom.concepts[i])) return false;
            }
            return true;
        default:
            throw UnsupportedFeature("entailment is only decided for class axioms");
    }
}

std::string taxonomy_to_json(const Taxonomy& tax) {
    nlohmann::ordered_json j;
    j["groups"] = tax.groups;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : tax.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["top"] = tax.top;
    j["bottom"] = tax.bottom;
    return j.dump(2) + "\n";
}

namespace {

void print_group(const Taxonomy& tax, int g, int depth, std::ostringstream& os,
                 std::vector<int>& onPath) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    for (std::size_t i = 0; i < tax.groups[g].size(); ++i) {
        if (i) os << " = ";
        os << render_name(tax.groups[g][i]);
    }
    os << "\n";
    if (std::find(onPath.begin(), onPath.end(), g) != onPath.end()) return;
    onPath.push_back(g);
    for (const auto& [sub, super] : tax.edges)
        if (super == g && sub != tax.bottom) print_group(tax, sub, depth + 1, os, onPath);
    onPath.pop_back();
}

}  // namespace

std::string taxonomy_to_text(const Taxonomy& tax) {
    std::ostringstream os;
    if (tax.top < 0) return "";
    std::vector<int> onPath;
    print_group(tax, tax.top, 0, os, onPath);
    os << "\n";
    for (std::size_t i = 0; i < tax.groups[tax.bottom].size(); ++i) {
        if (i) os << " = ";
        os << render_name(tax.groups[tax.bottom][i]);
    }
    os << "\n";
    return os.str();
}

}  // namespace sdl
