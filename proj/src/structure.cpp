#include "outpart/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace outpart {

std::vector<int> CondensationReport::terminal_components() const {
    std::vector<int> ids;
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].terminal) ids.push_back(static_cast<int>(i));
    return ids;
}

CondensationReport strong_components(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0;
    int comp_count = 0;

    // Iterative Tarjan; explicit frames keep deep digraphs safe.
    struct Frame {
        int v;
        size_t next_child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = d.out(f.v);
            if (f.next_child < succ.size()) {
                const int w = succ[f.next_child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == f.v) break;
                    }
                    ++comp_count;
                }
                const int finished = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[finished]);
            }
        }
    }

    // Renumber components by smallest member so output does not depend on
    // traversal internals.
    std::vector<int> smallest(comp_count, n);
    for (int v = 0; v < n; ++v) smallest[comp[v]] = std::min(smallest[comp[v]], v);
    std::vector<int> order(comp_count);
    for (int c = 0; c < comp_count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return smallest[a] < smallest[b]; });
    std::vector<int> renum(comp_count);
    for (int i = 0; i < comp_count; ++i) renum[order[i]] = i;

    CondensationReport report;
    report.component_of.resize(n);
    report.components.resize(comp_count);
    for (auto& c : report.components) {
        c.initial = true;
        c.terminal = true;
    }
    for (int v = 0; v < n; ++v) {
        const int c = renum[comp[v]];
        report.component_of[v] = c;
        report.components[c].vertices.push_back(v);
    }
    for (auto& c : report.components) c.trivial = c.vertices.size() == 1;
    for (auto [u, v] : d.arcs()) {
        const int cu = report.component_of[u], cv = report.component_of[v];
        if (cu != cv) {
            report.components[cu].terminal = false;
            report.components[cv].initial = false;
        }
    }
    return report;
}

bool is_strong(const Digraph& d) {
    if (d.vertex_count() == 0) return true;
    return strong_components(d).components.size() == 1;
}

namespace {

// Johnson's elementary-circuit enumeration, aborted at the first even cycle.
struct CycleEnumerator {
    const Digraph& d;
    long long budget;
    long long expansions = 0;
    bool out_of_budget = false;
    std::optional<Cycle> found;

    std::vector<char> blocked;
    std::vector<std::set<int>> blocked_by;
    std::vector<int> path;
    std::vector<char> in_component;
    int start = 0;

    explicit CycleEnumerator(const Digraph& dg, long long b)
        : d(dg), budget(b), blocked(dg.vertex_count(), 0), blocked_by(dg.vertex_count()) {}

    void unblock(int v) {
        blocked[v] = 0;
        auto pending = std::move(blocked_by[v]);
        blocked_by[v].clear();
        for (int w : pending)
            if (blocked[w]) unblock(w);
    }

    bool circuit(int v) {  // returns true when a cycle through `start` closed
        if (found || out_of_budget) return false;
        if (++expansions > budget) {
            out_of_budget = true;
            return false;
        }
        bool closed = false;
        path.push_back(v);
        blocked[v] = 1;
        for (int w : d.out(v)) {
            if (!in_component[w] || w < start) continue;
            if (w == start) {
                closed = true;
                if (path.size() % 2 == 0) {
                    found = Cycle{path};
                    break;
                }
            } else if (!blocked[w]) {
                if (circuit(w)) closed = true;
                if (found || out_of_budget) break;
            }
        }
        if (found || out_of_budget) {
            path.pop_back();
            return closed;
        }
        if (closed) {
            unblock(v);
        } else {
            for (int w : d.out(v))
                if (in_component[w] && w >= start) blocked_by[w].insert(v);
        }
        path.pop_back();
        return closed;
    }
};

}  // namespace

EvenCycleResult find_even_cycle(const Digraph& d, long long budget) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    // Digon short-circuit: any 2-cycle is even.
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v : d.out(u))
            if (v > u && d.has_arc(v, u)) return {EvenCycleResult::status::found, Cycle{{u, v}}};

    CycleEnumerator en(d, budget);
    const int n = d.vertex_count();
    for (int s = 0; s < n; ++s) {
        // Restrict to the strong component of s inside {s..n-1}; every simple
        // cycle whose smallest vertex is s lives there.
        std::vector<int> tail;
        for (int v = s; v < n; ++v) tail.push_back(v);
        auto [sub, back] = induced_subdigraph(d, tail);
        auto scc = strong_components(sub);
        const int cs = scc.component_of[0];  // s maps to local id 0
        if (scc.components[cs].trivial) continue;

        en.in_component.assign(n, 0);
        for (int local : scc.components[cs].vertices) en.in_component[back[local]] = 1;
        en.start = s;
        for (int v = 0; v < n; ++v) {
            en.blocked[v] = 0;
            en.blocked_by[v].clear();
        }
        en.circuit(s);
        if (en.found) return {EvenCycleResult::status::found, *en.found};
        if (en.out_of_budget) return {EvenCycleResult::status::budget_exceeded, {}};
    }
    return {EvenCycleResult::status::none, {}};
}

bool cycle_in_digraph(const Digraph& d, const Cycle& c) {
    const int L = c.length();
    if (L < 2) return false;
    std::set<int> seen(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(seen.size()) != L) return false;
    for (int i = 0; i < L; ++i) {
        const int u = c.vertices[i], v = c.vertices[(i + 1) % L];
        if (u < 0 || u >= d.vertex_count() || !d.has_arc(u, v)) return false;
    }
    return true;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);

    DegeneracyResult result;
    result.order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = v;
        removed[best] = 1;
        result.order.push_back(best);
        result.degeneracy = std::max(result.degeneracy, degree[best]);
        for (int w : g.neighbors(best))
            if (!removed[w]) --degree[w];
    }
    return result;
}

std::vector<int> greedy_color_reverse(const Graph& g, const std::vector<int>& order) {
    std::vector<int> color(g.vertex_count(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        std::set<int> used;
        for (int w : g.neighbors(v))
            if (color[w] != -1) used.insert(color[w]);
        int c = 0;
        while (used.count(c)) ++c;
        color[v] = c;
    }
    return color;
}

namespace {

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || n % 2 == 0 || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

bool color_backtrack(const Graph& g, const std::vector<int>& order, size_t at, int colors,
                     std::vector<int>& color) {
    if (at == order.size()) return true;
    const int v = order[at];
    for (int c = 0; c < colors; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (color_backtrack(g, order, at + 1, colors, color)) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

BrooksResult brooks_coloring(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("brooks_coloring requires a connected graph");
    if (is_complete(g) || is_odd_cycle(g)) return {BrooksResult::status::inapplicable, {}};

    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));

    // Exhaustive max_degree-coloring; existence is guaranteed here, and the
    // reverse degeneracy order keeps the search near-greedy.
    auto order = degeneracy_order(g).order;
    std::reverse(order.begin(), order.end());
    std::vector<int> color(g.vertex_count(), -1);
    if (!color_backtrack(g, order, 0, max_degree, color))
        throw std::logic_error("brooks_coloring: no coloring found on an applicable graph");
    return {BrooksResult::status::colored, std::move(color)};
}

TournamentClass classify_tournament(const Digraph& d) {
    TournamentClass result;
    const int n = d.vertex_count();
    result.order = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int arcs = (d.has_arc(u, v) ? 1 : 0) + (d.has_arc(v, u) ? 1 : 0);
            if (arcs != 1) return result;  // missing pair or digon
        }
    result.is_tournament = true;
    int lo = n == 0 ? 0 : d.out_degree(0), hi = lo;
    for (int v = 0; v < n; ++v) {
        lo = std::min(lo, d.out_degree(v));
        hi = std::max(hi, d.out_degree(v));
    }
    if (lo == hi) {
        result.shape = TournamentClass::regularity::regular;
        result.k = lo;
    } else if (hi - lo == 1) {
        result.shape = TournamentClass::regularity::almost_regular;
    } else {
        result.shape = TournamentClass::regularity::irregular;
    }
    return result;
}

}  // namespace outpart
