#include "strclan/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace strclan {

std::string AlgebraReport::text() const {
    std::ostringstream os;
    os << "string-algebra: " << (is_string_algebra ? "yes" : "no") << "\n";
    os << "clannish:       " << (is_clannish ? "yes" : "no") << "\n";
    os << "finite-dim:     " << (is_finite_dimensional ? "yes" : "no") << "\n";
    if (k_dimension) os << "k-dimension:    " << k_dimension->str() << "\n";
    else os << "k-dimension:    infinite\n";
    if (max_path_length) os << "path bound:     " << *max_path_length << "\n";
    else os << "path bound:     infinite\n";
    for (const auto& fa : failed_axioms) os << "failed " << fa.axiom << ": " << fa.witness << "\n";
    return os.str();
}

PathAutomaton::PathAutomaton(const Presentation& p) : pres(&p) {
    trie.push_back(TrieNode{});
    // forbidden factors in walk (application) order: reversed relations,
    // plus the square of every special loop
    std::vector<std::vector<int>> patterns;
    for (const auto& r : p.relation_indices()) {
        std::vector<int> pat(r.rbegin(), r.rend());
        patterns.push_back(std::move(pat));
    }
    for (size_t i = 0; i < p.quiver.arrows.size(); ++i)
        if (p.quiver.arrows[i].special) patterns.push_back({static_cast<int>(i), static_cast<int>(i)});

    for (const auto& pat : patterns) {
        int cur = 0;
        for (int arrow : pat) {
            int nxt = -1;
            for (auto& [a, n] : trie[cur].next)
                if (a == arrow) { nxt = n; break; }
            if (nxt < 0) {
                nxt = static_cast<int>(trie.size());
                trie[cur].next.emplace_back(arrow, nxt);
                trie.push_back(TrieNode{});
            }
            cur = nxt;
        }
        trie[cur].terminal = true;
    }
    // BFS fail links; propagate terminal through dictionary suffixes
    std::deque<int> q;
    for (auto& [a, n] : trie[0].next) { trie[n].fail = 0; q.push_back(n); }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (trie[trie[u].fail].terminal) trie[u].terminal = true;
        for (auto& [a, n] : trie[u].next) {
            trie[n].fail = goto_raw(trie[u].fail, a);
            q.push_back(n);
        }
    }
}

int PathAutomaton::goto_raw(int node, int arrow) const {
    while (true) {
        for (const auto& [a, n] : trie[node].next)
            if (a == arrow) return n;
        if (node == 0) return 0;
        node = trie[node].fail;
    }
}

int PathAutomaton::step(int node, int arrow) const { return goto_raw(node, arrow); }

void PathAutomaton::build_states(std::vector<std::vector<std::pair<int, int>>>& adj,
                                 std::vector<std::pair<int, int>>& states) const {
    const Quiver& q = pres->quiver;
    std::map<std::pair<int, int>, int> index;
    auto get = [&](int v, int node) {
        auto key = std::make_pair(v, node);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(states.size());
        index[key] = id;
        states.push_back(key);
        adj.emplace_back();
        return id;
    };
    std::deque<int> work;
    for (size_t v = 0; v < q.vertices.size(); ++v) work.push_back(get(static_cast<int>(v), 0));
    size_t done = 0;
    while (done < states.size()) {
        int s = static_cast<int>(done++);
        auto [v, node] = states[s];
        for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
            if (q.vertex_index.at(q.arrows[ai].source) != v) continue;
            int nnode = step(node, static_cast<int>(ai));
            if (forbidden(nnode)) continue;
            int tv = q.vertex_index.at(q.arrows[ai].target);
            int t = get(tv, nnode);
            adj[s].emplace_back(static_cast<int>(ai), t);
        }
    }
}

std::optional<std::vector<std::string>> PathAutomaton::find_cycle() const {
    std::vector<std::vector<std::pair<int, int>>> adj;
    std::vector<std::pair<int, int>> states;
    build_states(adj, states);
    std::vector<int> color(states.size(), 0);
    std::vector<int> parent(states.size(), -1), via(states.size(), -1);
    for (size_t root = 0; root < states.size(); ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{static_cast<int>(root), 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < adj[u].size()) {
                auto [arrow, w] = adj[u][idx++];
                if (color[w] == 0) {
                    color[w] = 1;
                    parent[w] = u;
                    via[w] = arrow;
                    stack.emplace_back(w, 0);
                } else if (color[w] == 1) {
                    // unwind the cycle w -> ... -> u -> w
                    std::vector<std::string> cyc{pres->quiver.arrows[arrow].id};
                    int cur = u;
                    while (cur != w) {
                        cyc.push_back(pres->quiver.arrows[via[cur]].id);
                        cur = parent[cur];
                    }
                    std::reverse(cyc.begin(), cyc.end());
                    return cyc;
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::pair<BigInt, int> PathAutomaton::count_and_longest() const {
    std::vector<std::vector<std::pair<int, int>>> adj;
    std::vector<std::pair<int, int>> states;
    build_states(adj, states);
    // topological order via repeated indegree removal
    std::vector<int> indeg(states.size(), 0);
    for (const auto& out : adj)
        for (auto [a, t] : out) ++indeg[t];
    std::deque<int> q;
    for (size_t i = 0; i < states.size(); ++i)
        if (indeg[i] == 0) q.push_back(static_cast<int>(i));
    std::vector<int> topo;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        topo.push_back(u);
        for (auto [a, t] : adj[u])
            if (--indeg[t] == 0) q.push_back(t);
    }
    if (topo.size() != states.size()) throw domain_error("path automaton has a cycle (infinite-dimensional)");
    std::vector<BigInt> ways(states.size(), 0);
    std::vector<int> longest(states.size(), 0);
    // start states are the (vertex, root) pairs, created first
    for (size_t i = 0; i < pres->quiver.vertices.size(); ++i) ways[i] = 1;
    BigInt total = 0;
    int best = 0;
    for (int u : topo) {
        total += ways[u];
        best = std::max(best, longest[u]);
        for (auto [a, t] : adj[u]) {
            ways[t] += ways[u];
            longest[t] = std::max(longest[t], longest[u] + 1);
        }
    }
    return {total, best};
}

namespace {

void check_s1_c1(const Presentation& p, const char* tag, std::vector<AxiomFailure>& fails) {
    for (const auto& v : p.quiver.vertices) {
        int starts = 0, ends = 0;
        for (const auto& a : p.quiver.arrows) {
            if (a.source == v) ++starts;
            if (a.target == v) ++ends;
        }
        if (starts > 2) fails.push_back({tag, "vertex '" + v + "' has " + std::to_string(starts) + " outgoing arrows"});
        if (ends > 2) fails.push_back({tag, "vertex '" + v + "' has " + std::to_string(ends) + " incoming arrows"});
    }
}

bool pair_in_relations(const Presentation& p, const std::string& left, const std::string& right) {
    for (const auto& r : p.relations)
        if (r.size() == 2 && r[0] == left && r[1] == right) return true;
    return false;
}

// (S2)/(C2): for b, at most one composable a with ba not a relation, and at
// most one composable c with cb not a relation. ordinary_b_only restricts b.
void check_s2_c2(const Presentation& p, const char* tag, bool ordinary_b_only, std::vector<AxiomFailure>& fails) {
    for (const auto& b : p.quiver.arrows) {
        if (ordinary_b_only && b.special) continue;
        std::vector<std::string> after, before;
        for (const auto& a : p.quiver.arrows) {
            if (b.source == a.target && !pair_in_relations(p, b.id, a.id)) after.push_back(a.id);
            if (a.source == b.target && !pair_in_relations(p, a.id, b.id)) before.push_back(a.id);
        }
        if (after.size() > 1)
            fails.push_back({tag, "arrow '" + b.id + "' composes with both '" + after[0] + "' and '" + after[1] + "'"});
        if (before.size() > 1)
            fails.push_back({tag, "arrows '" + before[0] + "' and '" + before[1] + "' both compose with '" + b.id + "'"});
    }
}

void fill_dimension(const Presentation& p, AlgebraReport& rep) {
    PathAutomaton aut(p);
    auto cyc = aut.find_cycle();
    if (cyc) {
        rep.is_finite_dimensional = false;
    } else {
        rep.is_finite_dimensional = true;
        auto [dim, longest] = aut.count_and_longest();
        rep.k_dimension = dim;
        rep.max_path_length = longest;
    }
}

} // namespace

AlgebraReport validate_string_algebra(const Presentation& p) {
    p.check_well_formed();
    AlgebraReport rep;
    for (const auto& a : p.quiver.arrows)
        if (a.special) rep.failed_axioms.push_back({"S0", "special arrow '" + a.id + "' present (string algebras have none)"});
    check_s1_c1(p, "S1", rep.failed_axioms);
    check_s2_c2(p, "S2", false, rep.failed_axioms);
    PathAutomaton aut(p);
    auto cyc = aut.find_cycle();
    if (cyc) {
        std::string w;
        for (const auto& id : *cyc) w += (w.empty() ? "" : " ") + id;
        rep.failed_axioms.push_back({"S3", "relation-free cycle: " + w});
        rep.is_finite_dimensional = false;
    } else {
        rep.is_finite_dimensional = true;
        auto [dim, longest] = aut.count_and_longest();
        rep.k_dimension = dim;
        rep.max_path_length = longest;
    }
    rep.is_string_algebra = rep.failed_axioms.empty();
    // a string algebra is clannish with empty special set
    if (rep.is_string_algebra) rep.is_clannish = true;
    return rep;
}

AlgebraReport validate_clannish(const Presentation& p) {
    p.check_well_formed();
    AlgebraReport rep;
    for (const auto& r : p.relations)
        for (const auto& id : r)
            if (p.quiver.arrow(id).special) {
                std::string w;
                for (const auto& x : r) w += (w.empty() ? "" : " ") + x;
                rep.failed_axioms.push_back({"C0", "relation [" + w + "] involves special loop '" + id + "'"});
            }
    check_s1_c1(p, "C1", rep.failed_axioms);
    check_s2_c2(p, "C2", true, rep.failed_axioms);
    rep.is_clannish = rep.failed_axioms.empty();
    fill_dimension(p, rep);
    if (rep.is_clannish && !p.has_special()) rep.is_string_algebra = validate_string_algebra(p).is_string_algebra;
    return rep;
}

int path_length_bound(const Presentation& p) {
    PathAutomaton aut(p);
    if (aut.find_cycle()) throw domain_error("path_length_bound: algebra is infinite-dimensional");
    return aut.count_and_longest().second;
}

} // namespace strclan
