#include "outpart/solvers.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "outpart/checkers.hpp"
#include "outpart/structure.hpp"

namespace outpart {

namespace {

// Extends seed colors over the whole digraph: repeatedly the smallest-id
// uncolored vertex with a colored out-neighbour gets the opposite color of
// its smallest-id colored out-neighbour. Every vertex reaches a colored
// terminal component, so this covers everything.
void propagate_opposite(const Digraph& d, std::vector<int>& color) {
    const int n = d.vertex_count();
    while (true) {
        int pick = -1, source = -1;
        for (int v = 0; v < n && pick == -1; ++v) {
            if (color[v] != -1) continue;
            for (int w : d.out(v))
                if (color[w] != -1) {
                    pick = v;
                    source = w;
                    break;
                }
        }
        if (pick == -1) break;
        color[pick] = 1 - color[source];
    }
    for (int v = 0; v < n; ++v)
        if (color[v] == -1) throw std::logic_error("propagation left an uncolored vertex");
}

Partition certified(const Digraph& d, std::vector<int> color, int parts, int k, bool max_variant) {
    Partition p(parts, std::move(color));
    const bool bad = max_variant ? check_max_reducing(d, p, k).has_value()
                                 : check_all_reducing(d, p, k).has_value();
    if (bad) throw std::logic_error("solver produced a partition its checker rejects");
    return p;
}

// Even cycle within one strong component, mapped back to global ids.
EvenCycleResult component_even_cycle(const Digraph& d, const std::vector<int>& component,
                                     long long budget) {
    auto [sub, back] = induced_subdigraph(d, component);
    auto result = find_even_cycle(sub, budget);
    if (result.outcome == EvenCycleResult::status::found)
        for (int& v : result.cycle.vertices) v = back[v];
    return result;
}

}  // namespace

SolveOutcome solve_one_all_2partition(const Digraph& d, long long cycle_budget) {
    const int n = d.vertex_count();
    const auto scc = strong_components(d);
    std::vector<int> color(n, -1);

    for (int ci : scc.terminal_components()) {
        const auto& comp = scc.components[ci];
        if (comp.trivial) {
            color[comp.vertices[0]] = 0;  // sinks take color 1 (part 0)
            continue;
        }
        auto cycle = component_even_cycle(d, comp.vertices, cycle_budget);
        if (cycle.outcome == EvenCycleResult::status::budget_exceeded) return Indeterminate{};
        if (cycle.outcome == EvenCycleResult::status::none)
            return NonExistence{comp.vertices, "terminal strong component has no even directed cycle"};
        for (int i = 0; i < cycle.cycle.length(); ++i) color[cycle.cycle.vertices[i]] = i % 2;
    }
    propagate_opposite(d, color);
    return certified(d, std::move(color), 2, 1, false);
}

SolveOutcome solve_one_max_2partition(const Digraph& d, long long cycle_budget) {
    const int n = d.vertex_count();
    const auto profile = degree_profile(d);
    if (profile.max_out == 0) {
        // Nothing to reduce; any partition works.
        return certified(d, std::vector<int>(n, 0), 2, 1, true);
    }
    const auto scc = strong_components(d);
    std::vector<int> color(n, -1);

    for (int ci : scc.terminal_components()) {
        const auto& comp = scc.components[ci];
        auto cycle = comp.trivial ? EvenCycleResult{EvenCycleResult::status::none, {}}
                                  : component_even_cycle(d, comp.vertices, cycle_budget);
        if (cycle.outcome == EvenCycleResult::status::budget_exceeded) return Indeterminate{};
        if (cycle.outcome == EvenCycleResult::status::found) {
            for (int i = 0; i < cycle.cycle.length(); ++i) color[cycle.cycle.vertices[i]] = i % 2;
            continue;
        }
        int low = -1;  // smallest-id vertex of out-degree below the maximum
        for (int v : comp.vertices)
            if (profile.out_degree[v] < profile.max_out) {
                low = v;
                break;
            }
        if (low == -1)
            return NonExistence{comp.vertices,
                                "terminal strong component has no even directed cycle and no vertex "
                                "of out-degree below the maximum"};
        color[low] = 0;
    }
    propagate_opposite(d, color);
    return certified(d, std::move(color), 2, 1, true);
}

Partition solve_k_all_partition_2k_plus_1(const Digraph& d, int k) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    const int n = d.vertex_count();
    // Keep min{k, d+(v)} arcs per vertex (smallest heads); every kept arc
    // will cross parts.
    Graph kept(n);
    for (int v = 0; v < n; ++v) {
        const auto& heads = d.out(v);
        const int take = std::min<int>(k, static_cast<int>(heads.size()));
        for (int i = 0; i < take; ++i)
            if (!kept.has_edge(v, heads[i])) kept.add_edge(v, heads[i]);
    }
    const auto degen = degeneracy_order(kept);
    auto color = greedy_color_reverse(kept, degen.order);
    return certified(d, std::move(color), 2 * k + 1, k, false);
}

namespace {

// Working state for the 2k solver: active vertex mask plus a mutable arc set.
struct Workspace {
    int n;
    std::vector<char> active;
    std::vector<std::set<int>> out, in;

    explicit Workspace(const Digraph& d)
        : n(d.vertex_count()), active(d.vertex_count(), 1), out(d.vertex_count()),
          in(d.vertex_count()) {
        for (auto [u, v] : d.arcs()) {
            out[u].insert(v);
            in[v].insert(u);
        }
    }

    void remove_arc(int u, int v) {
        out[u].erase(v);
        in[v].erase(u);
    }

    void remove_vertex(int v) {
        active[v] = 0;
        for (int w : out[v]) in[w].erase(v);
        for (int w : in[v]) out[w].erase(v);
        out[v].clear();
        in[v].clear();
    }

    Digraph snapshot() const {
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            if (active[u])
                for (int v : out[u]) d.add_arc(u, v);
        return d;
    }

    std::vector<int> active_vertices() const {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (active[v]) vs.push_back(v);
        return vs;
    }

    // Distinct undirected neighbours of v among active vertices.
    std::vector<int> ug_neighbors(int v) const {
        std::set<int> nb(out[v].begin(), out[v].end());
        nb.insert(in[v].begin(), in[v].end());
        return {nb.begin(), nb.end()};
    }
};

std::optional<std::vector<int>> find_k_regular_tournament_terminal(const Digraph& d, int k) {
    const auto scc = strong_components(d);
    for (int ci : scc.terminal_components()) {
        const auto& comp = scc.components[ci];
        auto [sub, back] = induced_subdigraph(d, comp.vertices);
        if (classify_tournament(sub).is_regular_k(k)) return comp.vertices;
    }
    return std::nullopt;
}

// True when deleting arc (x, v) would leave x inside a terminal strong
// component that is a k-regular tournament. Only x's component can turn bad.
bool deletion_unsafe(Workspace& ws, int x, int v, int k) {
    ws.remove_arc(x, v);
    const auto d = ws.snapshot();
    const auto scc = strong_components(d);
    const auto& comp = scc.components[scc.component_of[x]];
    bool bad = false;
    if (comp.terminal) {
        std::vector<int> members;
        for (int u : comp.vertices)
            if (ws.active[u]) members.push_back(u);
        auto [sub, back] = induced_subdigraph(d, members);
        bad = classify_tournament(sub).is_regular_k(k);
    }
    ws.out[x].insert(v);
    ws.in[v].insert(x);
    return bad;
}

}  // namespace

SolveOutcome solve_k_all_partition_2k(const Digraph& d, int k) {
    if (k < 2) throw std::invalid_argument("solve_k_all_partition_2k requires k >= 2");
    if (auto witness = find_k_regular_tournament_terminal(d, k))
        return NonExistence{*witness, "terminal strong component is a " + std::to_string(k) +
                                          "-regular tournament"};

    const int n = d.vertex_count();
    const int parts = 2 * k;
    Workspace ws(d);

    // Phase 1: while some vertex keeps out-degree above k, delete one of its
    // out-arcs. The head is the smallest candidate that provably preserves
    // "no terminal k-regular tournament": with an independent out-
    // neighbourhood any head works; otherwise the head must close an arc
    // among the out-neighbours, and a direct re-check rejects the rare heads
    // whose removal re-creates the obstruction.
    while (true) {
        int x = -1;
        for (int v = 0; v < n && x == -1; ++v)
            if (ws.active[v] && static_cast<int>(ws.out[v].size()) > k) x = v;
        if (x == -1) break;

        bool independent = true;
        for (int u : ws.out[x]) {
            for (int v : ws.out[x])
                if (u != v && ws.out[u].count(v)) {
                    independent = false;
                    break;
                }
            if (!independent) break;
        }
        std::vector<int> candidates;
        if (independent) {
            candidates.assign(ws.out[x].begin(), ws.out[x].end());
        } else {
            for (int v : ws.out[x])
                for (int u : ws.out[x])
                    if (u != v && ws.out[u].count(v)) {
                        candidates.push_back(v);
                        break;
                    }
        }
        bool deleted = false;
        for (int v : candidates)
            if (!deletion_unsafe(ws, x, v, k)) {
                ws.remove_arc(x, v);
                deleted = true;
                break;
            }
        if (!deleted) throw std::logic_error("2k solver: every arc deletion re-creates an obstruction");
    }

    // Phase 2: peel vertices whose underlying degree is at most 2k-1,
    // remembering their neighbours for reinsertion.
    std::vector<std::pair<int, std::vector<int>>> peeled;
    while (true) {
        int w = -1;
        std::vector<int> nb;
        for (int v = 0; v < n && w == -1; ++v) {
            if (!ws.active[v]) continue;
            auto cand = ws.ug_neighbors(v);
            if (static_cast<int>(cand.size()) <= 2 * k - 1) {
                w = v;
                nb = std::move(cand);
            }
        }
        if (w == -1) break;
        peeled.emplace_back(w, std::move(nb));
        ws.remove_vertex(w);
    }

    // Phase 3: whatever is left has every underlying degree exactly 2k, so
    // each connected component is Brooks-colorable with 2k colors (complete
    // components would contradict the tournament check above, and odd cycles
    // need k = 1).
    std::vector<int> part(n, -1);
    auto remaining = ws.active_vertices();
    if (!remaining.empty()) {
        const auto current = ws.snapshot();
        auto [sub, back] = induced_subdigraph(current, remaining);
        const Graph ug = underlying_graph(sub);
        std::vector<char> seen(ug.vertex_count(), 0);
        for (int start = 0; start < ug.vertex_count(); ++start) {
            if (seen[start]) continue;
            std::vector<int> comp{start};
            seen[start] = 1;
            for (size_t i = 0; i < comp.size(); ++i)
                for (int w : ug.neighbors(comp[i]))
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            auto result = brooks_coloring(induced_subgraph(ug, comp));
            if (result.outcome != BrooksResult::status::colored)
                throw std::logic_error("2k solver: Brooks case hit a complete graph or odd cycle");
            for (size_t i = 0; i < comp.size(); ++i) part[back[comp[i]]] = result.coloring[i];
        }
    }

    // Reinsert peeled vertices, newest first, each apart from all of its at
    // most 2k-1 recorded neighbours.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        std::set<int> used;
        for (int w : it->second) used.insert(part[w]);
        int choice = 0;
        while (used.count(choice)) ++choice;
        if (choice >= parts) throw std::logic_error("2k solver: no free part at reinsertion");
        part[it->first] = choice;
    }

    return certified(d, std::move(part), parts, k, false);
}

Partition halve_degrees_undirected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, 0);
    while (true) {
        int flip = -1;
        for (int v = 0; v < n && flip == -1; ++v) {
            int inside = 0;
            for (int w : g.neighbors(v))
                if (side[w] == side[v]) ++inside;
            if (2 * inside > g.degree(v)) flip = v;
        }
        if (flip == -1) break;
        side[flip] = 1 - side[flip];  // strictly grows the cut
    }
    Partition p(2, std::move(side));
    for (int v = 0; v < n; ++v) {
        int inside = 0;
        for (int w : g.neighbors(v))
            if (p.part_of[w] == p.part_of[v]) ++inside;
        if (2 * inside > g.degree(v)) throw std::logic_error("halve_degrees: local search left a violation");
    }
    return p;
}

}  // namespace outpart
