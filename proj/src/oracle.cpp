#include "outpart/oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace outpart {

bool property_holds(const Digraph& d, const Partition& p, const OracleProperty& property) {
    return std::visit(
        [&](const auto& prop) -> bool {
            using T = std::decay_t<decltype(prop)>;
            if constexpr (std::is_same_v<T, prop_all_reducing>)
                return !check_all_reducing(d, p, prop.k).has_value();
            else if constexpr (std::is_same_v<T, prop_max_reducing>)
                return !check_max_reducing(d, p, prop.k).has_value();
            else if constexpr (std::is_same_v<T, prop_delta_bounded>)
                return !check_delta_bounded(d, p, prop.k1, prop.k2).has_value();
            else if constexpr (std::is_same_v<T, prop_majority2>)
                return !check_majority_2coloring(d, p).has_value();
            else {
                std::vector<int> kernel;
                for (int v = 0; v < d.vertex_count(); ++v)
                    if (p.part_of[v] == 0) kernel.push_back(v);
                return check_kernel(d, kernel).valid();
            }
        },
        property);
}

namespace {

bool part_symmetric(const OracleProperty& property) {
    return std::visit(
        [](const auto& prop) -> bool {
            using T = std::decay_t<decltype(prop)>;
            if constexpr (std::is_same_v<T, prop_delta_bounded>)
                return prop.k1 == prop.k2;
            else if constexpr (std::is_same_v<T, prop_kernel_part>)
                return false;
            else
                return true;
        },
        property);
}

// Lexicographic scan of assignments with vertex 0 optionally pinned to part
// 0. `from`/`to` bound the value of the scan's most significant free digit,
// so the space can be chunked across threads.
struct ScanTask {
    const Digraph& d;
    const OracleProperty& property;
    int parts;
    bool pin_first;
    long long budget;

    std::optional<Partition> run(int msd_from, int msd_to, long long& used) {
        const int n = d.vertex_count();
        std::vector<int> a(n, 0);
        if (n == 0) {
            Partition p(parts, {});
            ++used;
            if (property_holds(d, p, property)) return p;
            return std::nullopt;
        }
        const int msd = pin_first && n > 1 ? 1 : 0;  // index being chunked
        if (pin_first && n == 1) msd_to = std::min(msd_to, 1);
        for (int digit = msd_from; digit < msd_to; ++digit) {
            std::fill(a.begin(), a.end(), 0);
            a[msd] = digit;
            while (true) {
                if (++used > budget) return std::nullopt;
                Partition p(parts, a);
                if (property_holds(d, p, property)) return p;
                // odometer over indices msd+1..n-1
                int i = n - 1;
                while (i > msd && a[i] == parts - 1) a[i--] = 0;
                if (i <= msd) break;
                ++a[i];
            }
        }
        return std::nullopt;
    }
};

}  // namespace

PartitionSearchResult exhaustive_partition_search(const Digraph& d, const OracleProperty& property,
                                                  int parts, long long budget, int jobs) {
    if (parts <= 0) throw std::invalid_argument("parts must be positive");
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    if (std::holds_alternative<prop_delta_bounded>(property) ||
        std::holds_alternative<prop_kernel_part>(property) ||
        std::holds_alternative<prop_majority2>(property)) {
        if (parts != 2) throw std::invalid_argument("property requires exactly 2 parts");
    }

    const bool pin = part_symmetric(property) && d.vertex_count() > 0;
    const int n = d.vertex_count();
    long long space = 1;
    for (int i = pin ? 1 : 0; i < n; ++i) {
        space *= parts;
        if (space > budget) break;
    }
    const bool over_budget_possible = space > budget;

    ScanTask task{d, property, parts, pin, budget};
    const int msd_values = n == 0 ? 1 : parts;

    if (jobs <= 1 || n <= 1 || over_budget_possible) {
        long long used = 0;
        auto witness = task.run(0, msd_values, used);
        if (witness) return {SearchStatus::found, *witness};
        if (used > budget) return {SearchStatus::budget_exceeded, {}};
        return {SearchStatus::none, {}};
    }

    // Workers race over chunks of the most significant digit; the reducer
    // takes the lexicographically least witness, so the outcome does not
    // depend on the schedule.
    std::vector<std::optional<Partition>> results(msd_values);
    std::vector<long long> used_per(msd_values, 0);
    std::vector<std::thread> threads;
    const int workers = std::min(jobs, msd_values);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            ScanTask local{d, property, parts, pin, budget};
            for (int digit = w; digit < msd_values; digit += workers)
                results[digit] = local.run(digit, digit + 1, used_per[digit]);
        });
    }
    for (auto& t : threads) t.join();
    for (int digit = 0; digit < msd_values; ++digit)
        if (results[digit]) return {SearchStatus::found, *results[digit]};
    return {SearchStatus::none, {}};
}

namespace {

// Kernel DFS state: 0 undecided, 1 in K, 2 out of K.
struct KernelSolver {
    const Digraph& d;
    std::vector<char> state;
    std::vector<int> in_kernel_out_nbrs;  // per vertex: out-neighbours in K
    std::vector<int> undecided_out_nbrs;
    std::vector<int> trail;
    bool enumerate_all = false;
    int limit = 1;
    std::vector<std::vector<int>> solutions;

    explicit KernelSolver(const Digraph& dg)
        : d(dg), state(dg.vertex_count(), 0), in_kernel_out_nbrs(dg.vertex_count(), 0),
          undecided_out_nbrs(dg.vertex_count(), 0) {
        for (int v = 0; v < d.vertex_count(); ++v) undecided_out_nbrs[v] = d.out_degree(v);
    }

    // Forces the single undecided out-neighbour of an undominated OUT vertex
    // into the kernel; false when no dominator can remain.
    bool ensure_dominated(int w) {
        if (state[w] != 2 || in_kernel_out_nbrs[w] > 0) return true;
        if (undecided_out_nbrs[w] == 0) return false;
        if (undecided_out_nbrs[w] == 1) {
            for (int z : d.out(w))
                if (state[z] == 0) return assign(z, 1);
        }
        return true;
    }

    bool assign(int v, char value) {  // false on conflict
        if (state[v] != 0) return state[v] == value;
        state[v] = value;
        trail.push_back(v);
        if (value == 1) {
            // counter pass must complete before any recursive call so that
            // undo() stays balanced
            for (int w : d.in(v)) ++in_kernel_out_nbrs[w];
            // independence: every neighbour (either arc direction) leaves K
            for (int w : d.out(v))
                if (!assign(w, 2)) return false;
            for (int w : d.in(v))
                if (!assign(w, 2)) return false;
        } else {
            for (int w : d.in(v)) --undecided_out_nbrs[w];
            for (int w : d.in(v))
                if (!ensure_dominated(w)) return false;
            if (!ensure_dominated(v)) return false;
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            const int v = trail.back();
            trail.pop_back();
            if (state[v] == 1) {
                for (int w : d.in(v)) --in_kernel_out_nbrs[w];
            } else {
                for (int w : d.in(v)) ++undecided_out_nbrs[w];
            }
            state[v] = 0;
        }
    }

    bool search(int from) {
        int v = from;
        while (v < d.vertex_count() && state[v] != 0) ++v;
        if (v == d.vertex_count()) {
            std::vector<int> kernel;
            for (int u = 0; u < d.vertex_count(); ++u)
                if (state[u] == 1) kernel.push_back(u);
            solutions.push_back(std::move(kernel));
            return !enumerate_all || static_cast<int>(solutions.size()) >= limit;
        }
        for (char value : {char(1), char(2)}) {
            const size_t mark = trail.size();
            if (assign(v, value) && search(v + 1)) return true;
            undo(mark);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> kernel_search(const Digraph& d) {
    KernelSolver solver(d);
    // sinks must be in any kernel
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) == 0 && !solver.assign(v, 1)) return std::nullopt;
    if (!solver.search(0)) return std::nullopt;
    return solver.solutions.front();
}

std::vector<std::vector<int>> enumerate_kernels(const Digraph& d, int limit) {
    KernelSolver solver(d);
    solver.enumerate_all = true;
    solver.limit = limit;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) == 0 && !solver.assign(v, 1)) return {};
    solver.search(0);
    return solver.solutions;
}

std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& f) {
    f.validate();
    if (f.vars > 24) throw std::invalid_argument("sat_brute_force guard: more than 24 variables");
    const long long total = 1LL << f.vars;
    std::vector<bool> assignment(f.vars, false);
    for (long long mask = 0; mask < total; ++mask) {
        for (int i = 0; i < f.vars; ++i) assignment[i] = (mask >> i) & 1;
        bool ok = true;
        for (const auto& clause : f.clauses)
            if (!clause_satisfied(clause, assignment, f.mode)) {
                ok = false;
                break;
            }
        if (ok) return assignment;
    }
    return std::nullopt;
}

namespace {

bool coloring_backtrack(const Graph& g, int colors, int v, std::vector<int>& color,
                        long long& nodes, long long budget, bool& out_of_budget) {
    if (v == g.vertex_count()) return true;
    if (++nodes > budget) {
        out_of_budget = true;
        return false;
    }
    for (int c = 0; c < colors; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (coloring_backtrack(g, colors, v + 1, color, nodes, budget, out_of_budget)) return true;
        color[v] = -1;
        if (out_of_budget) return false;
    }
    return false;
}

}  // namespace

ColoringSearchResult coloring_brute_force(const Graph& g, int colors, long long budget) {
    if (colors <= 0) throw std::invalid_argument("colors must be positive");
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    std::vector<int> color(g.vertex_count(), -1);
    long long nodes = 0;
    bool out_of_budget = false;
    if (coloring_backtrack(g, colors, 0, color, nodes, budget, out_of_budget))
        return {SearchStatus::found, std::move(color)};
    if (out_of_budget) return {SearchStatus::budget_exceeded, {}};
    return {SearchStatus::none, {}};
}

namespace {

// Two-coloring search with cap-saturation propagation and conflict-directed
// backjumping. Once a saturated vertex pins its undecided out-neighbours to
// the other part, the forcing reason is remembered; a later dead end jumps
// straight back to the decisions it actually depends on instead of
// re-enumerating unrelated subtrees (the reduction artifacts are full of
// interchangeable gadget-interior colorings that would otherwise thrash a
// chronological search).
struct DeltaSolver {
    const Digraph& d;
    int caps[2];
    std::vector<int> color;      // -1 undecided, else 0/1
    std::vector<int> same_out;   // same-part out-neighbours among colored
    std::vector<int> undec_out;  // undecided out-neighbours
    std::vector<int> trail;
    std::vector<std::vector<int>> reason;  // non-empty = forced assignment
    std::set<int> conflict;                // raw conflict vertices, pre-expansion
    long long nodes = 0;
    long long budget;
    bool out_of_budget = false;

    DeltaSolver(const Digraph& dg, int k1, int k2, long long b)
        : d(dg), caps{k1, k2}, color(dg.vertex_count(), -1), same_out(dg.vertex_count(), 0),
          undec_out(dg.vertex_count(), 0), reason(dg.vertex_count()), budget(b) {
        for (int v = 0; v < d.vertex_count(); ++v) undec_out[v] = d.out_degree(v);
    }

    std::vector<int> saturation_witness(int u) const {
        std::vector<int> why{u};
        for (int x : d.out(u))
            if (color[x] == color[u]) why.push_back(x);
        return why;
    }

    bool force(int w, int value, std::vector<int> why) {
        if (color[w] == value) return true;
        if (color[w] == 1 - value) {
            conflict.insert(w);
            conflict.insert(why.begin(), why.end());
            return false;
        }
        reason[w] = std::move(why);
        return assign(w, value);
    }

    bool saturated_ok(int u) {
        if (same_out[u] > caps[color[u]]) {
            const auto why = saturation_witness(u);
            conflict.insert(why.begin(), why.end());
            return false;
        }
        if (same_out[u] == caps[color[u]]) {
            for (int w : d.out(u)) {
                if (color[w] != -1) continue;
                if (!force(w, 1 - color[u], saturation_witness(u))) return false;
            }
        }
        return true;
    }

    bool assign(int v, int c) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (color[v] != -1) {
            if (color[v] == c) return true;
            conflict.insert(v);
            return false;
        }
        color[v] = c;
        trail.push_back(v);
        // complete the counter pass before propagating, so undo() reverses
        // exactly what was applied
        for (int w : d.in(v)) {
            --undec_out[w];
            if (color[w] == c) ++same_out[w];
        }
        for (int w : d.out(v))
            if (color[w] == c) ++same_out[v];
        if (!saturated_ok(v)) return false;
        for (int w : d.in(v))
            if (color[w] == c && !saturated_ok(w)) return false;
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            const int v = trail.back();
            trail.pop_back();
            for (int w : d.in(v)) {
                ++undec_out[w];
                if (color[w] == color[v]) --same_out[w];
            }
            color[v] = -1;
            same_out[v] = 0;
            reason[v].clear();
        }
    }

    /// Resolves the raw conflict down to decision/assumption vertices by
    /// substituting forced vertices with their recorded reasons.
    std::set<int> expand_conflict() {
        std::vector<int> stack(conflict.begin(), conflict.end());
        std::set<int> seen(conflict.begin(), conflict.end());
        std::set<int> roots;
        conflict.clear();
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (reason[v].empty()) {
                roots.insert(v);
                continue;
            }
            for (int x : reason[v])
                if (seen.insert(x).second) stack.push_back(x);
        }
        return roots;
    }

    // true = satisfying extension found; false = failed, `blame` holds the
    // decision vertices responsible (empty means unconditionally blocked)
    bool search(int from, std::set<int>& blame) {
        int v = from;
        while (v < d.vertex_count() && color[v] != -1) ++v;
        if (v == d.vertex_count()) {
            blame.clear();
            return true;
        }
        std::set<int> united;
        for (int c : {0, 1}) {
            const size_t mark = trail.size();
            if (assign(v, c)) {
                std::set<int> deeper;
                if (search(v + 1, deeper)) return true;
                undo(mark);
                if (out_of_budget) {
                    blame.clear();
                    return false;
                }
                if (!deeper.count(v)) {
                    blame = std::move(deeper);  // failure does not involve v: backjump
                    return false;
                }
                deeper.erase(v);
                united.insert(deeper.begin(), deeper.end());
            } else {
                auto roots = expand_conflict();
                undo(mark);
                if (out_of_budget) {
                    blame.clear();
                    return false;
                }
                if (!roots.count(v)) {
                    blame = std::move(roots);
                    return false;
                }
                roots.erase(v);
                united.insert(roots.begin(), roots.end());
            }
        }
        blame = std::move(united);
        return false;
    }
};

}  // namespace

PartitionSearchResult pruned_delta_search(const Digraph& d, int k1, int k2,
                                          const std::vector<std::pair<int, int>>& assumptions,
                                          long long budget) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    DeltaSolver solver(d, k1, k2, budget);
    for (auto [v, part] : assumptions) {
        if (v < 0 || v >= d.vertex_count() || (part != 0 && part != 1))
            throw std::invalid_argument("bad assumption");
        if (!solver.assign(v, part)) return {SearchStatus::none, {}};
    }
    std::set<int> blame;
    if (solver.search(0, blame)) {
        Partition p(2, solver.color);
        if (check_delta_bounded(d, p, k1, k2).has_value())
            throw std::logic_error("pruned_delta_search produced an invalid partition");
        return {SearchStatus::found, std::move(p)};
    }
    if (solver.out_of_budget) return {SearchStatus::budget_exceeded, {}};
    return {SearchStatus::none, {}};
}

}  // namespace outpart
