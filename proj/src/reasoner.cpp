#include "sdl/reasoner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sdl/errors.hpp"
#include "sdl/nnf.hpp"
#include "sdl/render.hpp"

namespace sdl {

const char* to_string(ClashKind kind) {
    switch (kind) {
        case ClashKind::ComplementPair: return "complement pair";
        case ClashKind::BottomInLabel: return "owl:Nothing in label";
        case ClashKind::CardinalityConflict: return "cardinality conflict";
    }
    return "?";
}

namespace {

constexpr int kQueryOrigin = -1;  // axiom index standing for the query concept

// ---------------------------------------------------------------------------
// Per-call pools: interned NNF concepts, canonical roles, origin sets.

struct PoolConcept {
    ConceptKind kind = ConceptKind::Top;
    int named = -1;            // index into names_ for Named / Not(Named)
    int role = -1;
    unsigned number = 0;
    std::vector<int> args;
    int complement = -1;       // Named <-> Not(Named) pairing
    ConceptPtr source;         // for rendering and witness output
};

struct PoolRole {
    std::string name;          // canonical (inverses resolved to names)
    int inverse = -1;
    bool transitive = false;
    std::vector<int> supers;   // ids s with this <= s (includes self)
    std::vector<int> transSubs;  // transitive ids s with s <= this
};

class Pools {
public:
    explicit Pools(const RoleBox& rb) : roleBox_(rb) {}

    int intern_role(const std::string& canonical) {
        auto it = roleIndex_.find(canonical);
        if (it != roleIndex_.end()) return it->second;
        if (finalized_) throw Error("internal: role interned after finalize");
        int id = static_cast<int>(roles_.size());
        roleIndex_.emplace(canonical, id);
        PoolRole r;
        r.name = canonical;
        roles_.push_back(std::move(r));
        return id;
    }

    /// Interns an NNF concept tree. Also validates the cardinality tier.
    int intern(const ConceptPtr& c) {
        switch (c->kind) {
            case ConceptKind::Top: return top_;
            case ConceptKind::Bottom: return bottom_;
            case ConceptKind::Named:
                return intern_structural(ConceptKind::Named, name_id(c->name), -1, 0, {}, c);
            case ConceptKind::Not: {
                if (c->args[0]->kind != ConceptKind::Named)
                    throw Error("internal: non-NNF negation reached the tableau");
                return intern_structural(ConceptKind::Not, name_id(c->args[0]->name), -1, 0, {},
                                         c);
            }
            case ConceptKind::And:
            case ConceptKind::Or: {
                std::vector<int> args;
                args.reserve(c->args.size());
                for (const auto& a : c->args) args.push_back(intern(a));
                return intern_structural(c->kind, -1, -1, 0, std::move(args), c);
            }
            case ConceptKind::Some:
            case ConceptKind::Only: {
                int filler = intern(c->args[0]);
                int role = intern_role(roleBox_.normalize(c->role));
                return intern_structural(c->kind, -1, role, 0, {filler}, c);
            }
            case ConceptKind::Min:
            case ConceptKind::Max: {
                std::string canonical = roleBox_.normalize(c->role);
                if (!roleBox_.is_simple(canonical))
                    throw UnsupportedFeature(
                        "cardinality restriction on non-simple (transitive) role '" +
                        render_role(c->role) + "'");
                int role = intern_role(canonical);
                return intern_structural(c->kind, -1, role, c->number, {}, c);
            }
            default:
                throw UnsupportedFeature("nominal construct '" + render(c) +
                                         "' cannot be reasoned over");
        }
    }

    /// Structural interning used by the transitivity rule (role id + filler id).
    int intern_only(int role, int filler) {
        ConceptPtr src = make_only({roles_[role].name, false}, concepts_[filler].source);
        return intern_structural(ConceptKind::Only, -1, role, 0, {filler}, src);
    }

    /// Closes the role table under inverses and precomputes hierarchy data.
    void finalize_roles() {
        for (std::size_t i = 0; i < roles_.size(); ++i)
            intern_role(roleBox_.inverse(roles_[i].name));  // may append
        finalized_ = true;
        for (std::size_t i = 0; i < roles_.size(); ++i) {
            roles_[i].inverse = roleIndex_.at(roleBox_.inverse(roles_[i].name));
            roles_[i].transitive = roleBox_.is_transitive(roles_[i].name);
        }
        for (std::size_t i = 0; i < roles_.size(); ++i) {
            for (std::size_t j = 0; j < roles_.size(); ++j) {
                if (roleBox_.is_sub(roles_[i].name, roles_[j].name))
                    roles_[i].supers.push_back(static_cast<int>(j));
                if (roles_[j].transitive && roleBox_.is_sub(roles_[j].name, roles_[i].name))
                    roles_[i].transSubs.push_back(static_cast<int>(j));
            }
        }
    }

    const PoolConcept& concept_at(int id) const { return concepts_[id]; }
    const PoolRole& role_at(int id) const { return roles_[id]; }
    bool is_sub_role(int sub, int sup) const {
        const auto& s = roles_[sub].supers;
        return std::binary_search(s.begin(), s.end(), sup);
    }
    int top() const { return top_; }
    int bottom() const { return bottom_; }

private:
    int name_id(const std::string& n) {
        auto it = nameIndex_.find(n);
        if (it != nameIndex_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        nameIndex_.emplace(n, id);
        names_.push_back(n);
        return id;
    }

    int intern_structural(ConceptKind kind, int named, int role, unsigned number,
                          std::vector<int> args, const ConceptPtr& source) {
        std::tuple<int, int, int, unsigned, std::vector<int>> key{
            static_cast<int>(kind), named, role, number, args};
        auto it = structIndex_.find(key);
        if (it != structIndex_.end()) return it->second;
        int id = static_cast<int>(concepts_.size());
        PoolConcept pc;
        pc.kind = kind;
        pc.named = named;
        pc.role = role;
        pc.number = number;
        pc.args = std::move(args);
        pc.source = source;
        concepts_.push_back(std::move(pc));
        structIndex_.emplace(std::move(key), id);
        // complement pairing for the clash check
        if (kind == ConceptKind::Named || kind == ConceptKind::Not) {
            ConceptKind other = kind == ConceptKind::Named ? ConceptKind::Not : ConceptKind::Named;
            std::tuple<int, int, int, unsigned, std::vector<int>> okey{
                static_cast<int>(other), named, -1, 0u, {}};
            auto oit = structIndex_.find(okey);
            if (oit != structIndex_.end()) {
                concepts_[id].complement = oit->second;
                concepts_[oit->second].complement = id;
            }
        }
        return id;
    }

    const RoleBox& roleBox_;
    std::vector<PoolConcept> concepts_ = [] {
        PoolConcept top;
        top.kind = ConceptKind::Top;
        top.source = make_top();
        PoolConcept bot;
        bot.kind = ConceptKind::Bottom;
        bot.source = make_bottom();
        return std::vector<PoolConcept>{top, bot};
    }();
    std::map<std::tuple<int, int, int, unsigned, std::vector<int>>, int> structIndex_;
    std::map<std::string, int> nameIndex_;
    std::vector<std::string> names_;
    std::vector<PoolRole> roles_;
    std::map<std::string, int> roleIndex_;
    bool finalized_ = false;
    int top_ = 0;
    int bottom_ = 1;
};

class OriginPool {
public:
    int of(int axiomIndex) {
        std::vector<int> v{axiomIndex};
        return of_set(std::move(v));
    }
    int unite(int a, int b) {
        if (a == b) return a;
        auto key = std::minmax(a, b);
        auto it = unionMemo_.find(key);
        if (it != unionMemo_.end()) return it->second;
        std::vector<int> merged;
        std::set_union(sets_[a].begin(), sets_[a].end(), sets_[b].begin(), sets_[b].end(),
                       std::back_inserter(merged));
        int id = of_set(std::move(merged));
        unionMemo_.emplace(key, id);
        return id;
    }
    const std::vector<int>& axioms(int id) const { return sets_[id]; }

private:
    int of_set(std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        auto it = index_.find(v);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(sets_.size());
        index_.emplace(v, id);
        sets_.push_back(std::move(v));
        return id;
    }
    std::vector<std::vector<int>> sets_;
    std::map<std::vector<int>, int> index_;
    std::map<std::pair<int, int>, int> unionMemo_;
};

// ---------------------------------------------------------------------------
// Completion graph

struct Label {
    std::vector<int> cids;     // sorted
    std::vector<int> origins;  // parallel to cids

    int position(int cid) const {
        auto it = std::lower_bound(cids.begin(), cids.end(), cid);
        if (it == cids.end() || *it != cid) return -1;
        return static_cast<int>(it - cids.begin());
    }
    bool contains(int cid) const { return position(cid) >= 0; }
    // returns true if inserted
    bool insert(int cid, int origin) {
        auto it = std::lower_bound(cids.begin(), cids.end(), cid);
        if (it != cids.end() && *it == cid) return false;
        std::size_t pos = it - cids.begin();
        cids.insert(it, cid);
        origins.insert(origins.begin() + pos, origin);
        return true;
    }
};

struct GraphNode {
    int parent = -1;  // tree predecessor; -1 for root nodes
    bool isRoot = false;
    bool alive = true;
    Label label;
};

struct GraphEdge {
    int from = 0;
    int to = 0;
    std::vector<int> roles;  // sorted role ids
    bool alive = true;
};

struct Graph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::pair<int, int>> distinct;
    std::vector<int> uf;

    int find(int x) const {
        while (uf[x] != x) x = uf[x];
        return x;
    }
};

// ---------------------------------------------------------------------------
// The tableau engine. One Engine per query; branch exploration copies the
// graph (chronological backtracking, no backjumping).

struct BranchOr {
    int node;
    int cid;  // the Or concept
};
struct BranchMerge {
    int node;
    int cid;  // the Max concept
    std::vector<std::pair<int, int>> pairs;  // mergeable neighbor pairs
};

class Engine {
public:
    Engine(Pools& pools, OriginPool& origins, std::size_t maxNodes)
        : P(pools), O(origins), maxNodes_(maxNodes) {}

    std::vector<std::pair<int, int>> gciAdds;  // (cid, originId) added to every node

    int add_root(Graph& g) {
        int id = new_node(g, -1, true);
        return id;
    }

    // Returns nullopt on satisfiable (g then holds the witness), clash otherwise.
    std::optional<ClashInfo> expand(Graph& g) {
        if (auto clash = saturate(g)) return clash;

        // branch point: lowest node id, lowest label position
        for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
            if (!g.nodes[x].alive || indirectly_blocked(g, x)) continue;
            const Label& label = g.nodes[x].label;
            for (std::size_t i = 0; i < label.cids.size(); ++i) {
                int cid = label.cids[i];
                const PoolConcept& c = P.concept_at(cid);
                if (c.kind == ConceptKind::Or) {
                    bool satisfied = false;
                    for (int arg : c.args)
                        if (label.contains(arg)) {
                            satisfied = true;
                            break;
                        }
                    if (satisfied) continue;
                    return branch_or(g, BranchOr{x, cid}, label.origins[i]);
                }
                if (c.kind == ConceptKind::Max) {
                    auto neighbors = role_neighbors(g, x, c.role);
                    if (neighbors.size() <= c.number) continue;
                    if (has_distinct_subset(g, neighbors, c.number + 1)) {
                        ClashInfo clash;
                        clash.kind = ClashKind::CardinalityConflict;
                        clash.description =
                            "node has more than " + std::to_string(c.number) +
                            " pairwise-distinct '" + P.role_at(c.role).name + "' neighbours (" +
                            render(c.source) + ")";
                        clash.axiomIndices = clash_axioms(g, x, label.origins[i], cid);
                        return clash;
                    }
                    BranchMerge mb{x, cid, {}};
                    for (std::size_t a = 0; a < neighbors.size(); ++a)
                        for (std::size_t b = a + 1; b < neighbors.size(); ++b)
                            if (!is_distinct(g, neighbors[a], neighbors[b]))
                                mb.pairs.emplace_back(neighbors[a], neighbors[b]);
                    if (mb.pairs.empty()) continue;  // count can't drop: rule inapplicable
                    return branch_merge(g, mb, label.origins[i]);
                }
            }
        }
        return std::nullopt;  // fully expanded, clash-free
    }

    CompletionGraphSummary summarize(const Graph& g) {
        CompletionGraphSummary s;
        for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
            if (!g.nodes[x].alive) continue;
            WitnessNode wn;
            wn.id = x;
            wn.root = g.nodes[x].isRoot;
            wn.blocked = directly_blocked(g, x);
            for (int cid : g.nodes[x].label.cids)
                wn.labels.push_back(render(P.concept_at(cid).source));
            std::sort(wn.labels.begin(), wn.labels.end());
            s.nodes.push_back(std::move(wn));
        }
        for (const auto& e : g.edges) {
            if (!e.alive) continue;
            WitnessEdge we;
            we.from = e.from;
            we.to = e.to;
            for (int r : e.roles) {
                const PoolRole& pr = P.role_at(r);
                if (is_synthetic_role(pr.name))
                    we.roles.push_back(render_role({P.role_at(pr.inverse).name, true}));
                else
                    we.roles.push_back(render_name(pr.name));
            }
            s.edges.push_back(std::move(we));
        }
        return s;
    }

    std::optional<ClashInfo> add_concept(Graph& g, int node, int cid, int origin) {
        GraphNode& n = g.nodes[node];
        if (!n.label.insert(cid, origin)) return std::nullopt;
        if (cid == P.bottom()) {
            ClashInfo clash;
            clash.kind = ClashKind::BottomInLabel;
            clash.description = "owl:Nothing in node label";
            clash.axiomIndices = O.axioms(origin);
            return clash;
        }
        const PoolConcept& c = P.concept_at(cid);
        if (c.complement >= 0) {
            int pos = n.label.position(c.complement);
            if (pos >= 0) {
                ClashInfo clash;
                clash.kind = ClashKind::ComplementPair;
                clash.description = "complement pair: " + render(c.source) + " / " +
                                    render(P.concept_at(c.complement).source);
                int o = O.unite(origin, n.label.origins[pos]);
                clash.axiomIndices = O.axioms(o);
                return clash;
            }
        }
        return std::nullopt;
    }

    int new_node(Graph& g, int parent, bool isRoot) {
        if (g.nodes.size() >= maxNodes_)
            throw ResourceLimit("completion graph exceeded " + std::to_string(maxNodes_) +
                                " nodes (raise --max-nodes)");
        GraphNode n;
        n.parent = parent;
        n.isRoot = isRoot;
        g.nodes.push_back(std::move(n));
        g.uf.push_back(static_cast<int>(g.nodes.size()) - 1);
        return static_cast<int>(g.nodes.size()) - 1;
    }

    std::optional<ClashInfo> seed_node(Graph& g, int node) {
        for (const auto& [cid, origin] : gciAdds)
            if (auto clash = add_concept(g, node, cid, origin)) return clash;
        return std::nullopt;
    }

    void add_edge(Graph& g, int from, int to, int role) {
        for (auto& e : g.edges) {
            if (!e.alive || e.from != from || e.to != to) continue;
            auto it = std::lower_bound(e.roles.begin(), e.roles.end(), role);
            if (it == e.roles.end() || *it != role) e.roles.insert(it, role);
            return;
        }
        g.edges.push_back({from, to, {role}, true});
    }

private:
    // --- neighbor & blocking machinery ---------------------------------------

    // Nodes reachable as `role`-neighbours of x (through the subrole closure,
    // both edge orientations), deduplicated, ascending.
    std::vector<int> role_neighbors(const Graph& g, int x, int role) const {
        std::set<int> out;
        for (const auto& e : g.edges) {
            if (!e.alive) continue;
            if (e.from == x) {
                for (int t : e.roles)
                    if (P.is_sub_role(t, role)) {
                        out.insert(e.to);
                        break;
                    }
            }
            if (e.to == x) {
                for (int t : e.roles)
                    if (P.is_sub_role(P.role_at(t).inverse, role)) {
                        out.insert(e.from);
                        break;
                    }
            }
        }
        return {out.begin(), out.end()};
    }

    std::vector<int> tree_edge_roles(const Graph& g, int parent, int child) const {
        for (const auto& e : g.edges)
            if (e.alive && e.from == parent && e.to == child) return e.roles;
        return {};
    }

    bool is_distinct(const Graph& g, int a, int b) const {
        int fa = g.find(a), fb = g.find(b);
        if (fa == fb) return false;
        for (const auto& [x, y] : g.distinct) {
            int fx = g.find(x), fy = g.find(y);
            if (!g.nodes[fx].alive || !g.nodes[fy].alive) continue;
            if ((fx == fa && fy == fb) || (fx == fb && fy == fa)) return true;
        }
        return false;
    }

    bool has_distinct_subset(const Graph& g, const std::vector<int>& candidates,
                             unsigned k) const {
        if (candidates.size() < k) return false;
        if (k == 0) return true;
        std::vector<int> chosen;
        return pick_distinct(g, candidates, 0, k, chosen);
    }

    bool pick_distinct(const Graph& g, const std::vector<int>& cand, std::size_t from, unsigned k,
                       std::vector<int>& chosen) const {
        if (chosen.size() == k) return true;
        for (std::size_t i = from; i < cand.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!is_distinct(g, c, cand[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(cand[i]);
            if (pick_distinct(g, cand, i + 1, k, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    // Pairwise blocking: x is directly blocked by an ancestor y when the
    // (label, predecessor label, connecting edge label) triples coincide.
    bool block_witness(const Graph& g, int x, int y) const {
        int xp = g.nodes[x].parent;
        int yp = g.nodes[y].parent;
        if (xp < 0 || yp < 0) return false;
        return g.nodes[x].label.cids == g.nodes[y].label.cids &&
               g.nodes[xp].label.cids == g.nodes[yp].label.cids &&
               tree_edge_roles(g, xp, x) == tree_edge_roles(g, yp, y);
    }

    // First node on the path root..x carrying a block witness; -1 if none.
    int blocking_entry(const Graph& g, int x) const {
        std::vector<int> path;  // x up to root
        for (int n = x; n >= 0; n = g.nodes[n].parent) path.push_back(n);
        // walk from the top down so indirect blocking wins
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            int n = *it;
            if (g.nodes[n].isRoot) continue;
            for (int y = g.nodes[n].parent; y >= 0; y = g.nodes[y].parent) {
                if (g.nodes[y].isRoot) break;
                if (block_witness(g, n, y)) return n;
            }
        }
        return -1;
    }

    bool blocked(const Graph& g, int x) const { return blocking_entry(g, x) >= 0; }
    bool directly_blocked(const Graph& g, int x) const { return blocking_entry(g, x) == x; }
    bool indirectly_blocked(const Graph& g, int x) const {
        int e = blocking_entry(g, x);
        return e >= 0 && e != x;
    }

    // --- deterministic rules --------------------------------------------------

    std::optional<ClashInfo> saturate(Graph& g) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
                if (!g.nodes[x].alive) continue;
                for (std::size_t i = 0; i < g.nodes[x].label.cids.size(); ++i) {
                    int cid = g.nodes[x].label.cids[i];
                    int origin = g.nodes[x].label.origins[i];
                    const PoolConcept& c = P.concept_at(cid);
                    switch (c.kind) {
                        case ConceptKind::And: {
                            if (indirectly_blocked(g, x)) break;
                            for (int arg : c.args) {
                                if (g.nodes[x].label.contains(arg)) continue;
                                if (auto clash = add_concept(g, x, arg, origin)) return clash;
                                changed = true;
                            }
                            break;
                        }
                        case ConceptKind::Only: {
                            if (indirectly_blocked(g, x)) break;
                            int filler = c.args[0];
                            for (int y : role_neighbors(g, x, c.role)) {
                                if (!g.nodes[y].label.contains(filler)) {
                                    if (auto clash = add_concept(g, y, filler, origin))
                                        return clash;
                                    changed = true;
                                }
                            }
                            // transitive propagation through the subrole closure
                            for (int s : P.role_at(c.role).transSubs) {
                                int forward = P.intern_only(s, filler);
                                for (int y : role_neighbors(g, x, s)) {
                                    if (g.nodes[y].label.contains(forward)) continue;
                                    if (auto clash = add_concept(g, y, forward, origin))
                                        return clash;
                                    changed = true;
                                }
                            }
                            break;
                        }
                        case ConceptKind::Some: {
                            if (blocked(g, x)) break;
                            int filler = c.args[0];
                            bool present = false;
                            for (int y : role_neighbors(g, x, c.role))
                                if (g.nodes[y].label.contains(filler)) {
                                    present = true;
                                    break;
                                }
                            if (present) break;
                            int y = new_node(g, x, false);
                            add_edge(g, x, y, c.role);
                            if (auto clash = seed_node(g, y)) return clash;
                            if (auto clash = add_concept(g, y, filler, origin)) return clash;
                            changed = true;
                            break;
                        }
                        case ConceptKind::Min: {
                            if (blocked(g, x)) break;
                            auto neighbors = role_neighbors(g, x, c.role);
                            if (has_distinct_subset(g, neighbors, c.number)) break;
                            std::vector<int> fresh;
                            for (unsigned k = 0; k < c.number; ++k) {
                                int y = new_node(g, x, false);
                                add_edge(g, x, y, c.role);
                                fresh.push_back(y);
                                if (auto clash = seed_node(g, y)) return clash;
                            }
                            for (std::size_t a = 0; a < fresh.size(); ++a)
                                for (std::size_t b = a + 1; b < fresh.size(); ++b)
                                    g.distinct.emplace_back(fresh[a], fresh[b]);
                            changed = true;
                            break;
                        }
                        default:
                            break;  // Or/Max branch later; atoms are inert
                    }
                }
            }
        }
        return std::nullopt;
    }

    // --- branching rules -------------------------------------------------------

    std::optional<ClashInfo> branch_or(Graph& g, const BranchOr& br, int origin) {
        const PoolConcept& c = P.concept_at(br.cid);
        std::optional<ClashInfo> lastClash;
        for (int arg : c.args) {
            Graph copy = g;
            auto clash = add_concept(copy, br.node, arg, origin);
            if (!clash) clash = expand(copy);
            if (!clash) {
                g = std::move(copy);
                return std::nullopt;
            }
            lastClash = std::move(clash);
        }
        return lastClash;
    }

    std::optional<ClashInfo> branch_merge(Graph& g, const BranchMerge& br, int origin) {
        std::optional<ClashInfo> lastClash;
        for (const auto& [a, b] : br.pairs) {
            Graph copy = g;
            auto clash = merge_pair(copy, br.node, a, b, origin);
            if (!clash) clash = expand(copy);
            if (!clash) {
                g = std::move(copy);
                return std::nullopt;
            }
            lastClash = std::move(clash);
        }
        return lastClash;
    }

    // Merges one of {a, b} into the other; the survivor must be the one the
    // tree hangs off (roots beat blockable nodes, x's predecessor beats x's
    // successors).
    std::optional<ClashInfo> merge_pair(Graph& g, int x, int a, int b, int origin) {
        (void)origin;
        int victim, target;
        bool aRoot = g.nodes[a].isRoot, bRoot = g.nodes[b].isRoot;
        if (aRoot && bRoot) {
            target = std::min(a, b);
            victim = std::max(a, b);
        } else if (aRoot != bRoot) {
            target = aRoot ? a : b;
            victim = aRoot ? b : a;
        } else if (g.nodes[x].parent == a) {
            target = a;
            victim = b;
        } else if (g.nodes[x].parent == b) {
            target = b;
            victim = a;
        } else {
            target = std::min(a, b);
            victim = std::max(a, b);
        }
        return merge(g, victim, target);
    }

    std::optional<ClashInfo> merge(Graph& g, int victim, int target) {
        // labels move first (clash possible)
        const Label vlabel = g.nodes[victim].label;  // copy: insertions reallocate
        for (std::size_t i = 0; i < vlabel.cids.size(); ++i) {
            int pos = g.nodes[target].label.position(vlabel.cids[i]);
            if (pos >= 0) {
                g.nodes[target].label.origins[pos] =
                    O.unite(g.nodes[target].label.origins[pos], vlabel.origins[i]);
                continue;
            }
            if (auto clash = add_concept(g, target, vlabel.cids[i], vlabel.origins[i]))
                return clash;
        }
        // predecessor edges point at the target now; successor edges survive
        // only towards root nodes, blockable successors are pruned
        std::vector<int> pruneList;
        for (auto& e : g.edges) {
            if (!e.alive) continue;
            if (e.to == victim && e.from != victim) {
                for (int r : e.roles) add_edge(g, e.from, target, r);
                e.alive = false;
            } else if (e.from == victim) {
                if (g.nodes[e.to].isRoot || e.to == victim) {
                    int dst = e.to == victim ? target : e.to;
                    for (int r : e.roles) add_edge(g, target, dst, r);
                } else {
                    pruneList.push_back(e.to);
                }
                e.alive = false;
            }
        }
        for (int p : pruneList) prune(g, p);
        g.nodes[victim].alive = false;
        g.uf[victim] = target;
        return std::nullopt;
    }

    void prune(Graph& g, int node) {
        if (!g.nodes[node].alive) return;
        g.nodes[node].alive = false;
        for (auto& e : g.edges) {
            if (!e.alive) continue;
            if (e.from == node) {
                e.alive = false;
                if (!g.nodes[e.to].isRoot) prune(g, e.to);
            } else if (e.to == node) {
                e.alive = false;
            }
        }
    }

    // responsible axioms for a cardinality clash: the Max entry plus any Min
    // entries at the node over subroles of the Max's role
    std::vector<int> clash_axioms(const Graph& g, int x, int maxOrigin, int maxCid) {
        int acc = maxOrigin;
        const PoolConcept& mx = P.concept_at(maxCid);
        const Label& label = g.nodes[x].label;
        for (std::size_t i = 0; i < label.cids.size(); ++i) {
            const PoolConcept& c = P.concept_at(label.cids[i]);
            if (c.kind == ConceptKind::Min && P.is_sub_role(c.role, mx.role))
                acc = O.unite(acc, label.origins[i]);
        }
        return O.axioms(acc);
    }

    Pools& P;
    OriginPool& O;
    std::size_t maxNodes_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Reasoner

Reasoner::Reasoner(const KnowledgeBase& kb, Options options)
    : kb_(kb), options_(options) {
    roleBox_ = RoleBox::build(kb.axioms(), kb.signature().roleNames);
    gcis_ = to_gcis(kb.axioms());

    std::map<std::string, std::size_t> nodeOf;
    auto node_for = [&](const std::string& individual) {
        auto it = nodeOf.find(individual);
        if (it != nodeOf.end()) return it->second;
        std::size_t id = aboxNodes_.size();
        aboxNodes_.push_back({individual, {}});
        nodeOf.emplace(individual, id);
        return id;
    };
    // every declared individual gets a node even without assertions
    for (const auto& ind : kb.signature().individualNames) node_for(ind);

    const auto& axioms = kb.axioms();
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom& ax = axioms[i];
        if (ax.kind == AxiomKind::ClassAssertion) {
            std::size_t n = node_for(ax.names[0]);
            aboxNodes_[n].labels.emplace_back(nnf(ax.concepts[0]), static_cast<int>(i));
        } else if (ax.kind == AxiomKind::PropertyAssertion) {
            std::size_t from = node_for(ax.names[0]);
            std::size_t to = node_for(ax.names[1]);
            aboxEdges_.push_back(
                {from, to, roleBox_.normalize(ax.roles[0]), static_cast<int>(i)});
        }
    }
}

SatResult Reasoner::run(const ConceptPtr* query) const {
    Pools pools(roleBox_);
    OriginPool origins;
    Engine engine(pools, origins, options_.maxNodes);

    for (const auto& gci : gcis_)
        engine.gciAdds.emplace_back(pools.intern(gci.disjunct), origins.of(gci.axiomIndex));

    struct SeedConcept {
        int cid;
        int origin;
    };
    std::vector<std::vector<SeedConcept>> rootSeeds(aboxNodes_.size());
    for (std::size_t i = 0; i < aboxNodes_.size(); ++i)
        for (const auto& [c, axIdx] : aboxNodes_[i].labels)
            rootSeeds[i].push_back({pools.intern(c), origins.of(axIdx)});

    int queryCid = -1;
    if (query) {
        if (contains_nominal(**query))
            throw UnsupportedFeature("nominal construct in query concept '" + render(*query) +
                                     "'");
        queryCid = pools.intern(nnf(*query));
    }
    for (const auto& e : aboxEdges_) pools.intern_role(e.role);
    pools.finalize_roles();

    Graph g;
    std::vector<int> rootIds;
    auto clash_result = [&](ClashInfo clash) {
        SatResult r;
        r.satisfiable = false;
        std::sort(clash.axiomIndices.begin(), clash.axiomIndices.end());
        clash.axiomIndices.erase(
            std::unique(clash.axiomIndices.begin(), clash.axiomIndices.end()),
            clash.axiomIndices.end());
        r.clash = std::move(clash);
        return r;
    };

    for (std::size_t i = 0; i < aboxNodes_.size(); ++i) {
        int id = engine.add_root(g);
        rootIds.push_back(id);
        if (auto clash = engine.seed_node(g, id)) return clash_result(std::move(*clash));
        for (const auto& seed : rootSeeds[i])
            if (auto clash = engine.add_concept(g, id, seed.cid, seed.origin))
                return clash_result(std::move(*clash));
    }
    for (const auto& e : aboxEdges_)
        engine.add_edge(g, rootIds[e.from], rootIds[e.to],
                        pools.intern_role(e.role));

    int queryNode = -1;
    if (query || aboxNodes_.empty()) {
        // models have non-empty domains, so consistency of an individual-free
        // KB still needs one anonymous node
        queryNode = engine.add_root(g);
        if (auto clash = engine.seed_node(g, queryNode))
            return clash_result(std::move(*clash));
    }
    if (query) {
        if (auto clash = engine.add_concept(g, queryNode, queryCid, origins.of(kQueryOrigin)))
            return clash_result(std::move(*clash));
    }

    if (auto clash = engine.expand(g)) return clash_result(std::move(*clash));

    SatResult r;
    r.satisfiable = true;
    r.witness = engine.summarize(g);
    return r;
}

SatResult Reasoner::is_satisfiable(const ConceptPtr& c) const { return run(&c); }

SatResult Reasoner::is_consistent() const { return run(nullptr); }

bool Reasoner::subsumes(const ConceptPtr& sub, const ConceptPtr& sup) const {
    ConceptPtr query = make_and({nnf(sub), nnf_negated(sup)});
    return !is_satisfiable(query).satisfiable;
}

}  // namespace sdl
