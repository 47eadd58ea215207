#include "outpart/gadgets.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "outpart/structure.hpp"

namespace outpart {

void GadgetInstance::validate_roles() const {
    std::vector<char> covered(digraph.vertex_count(), 0);
    for (const auto& [name, ids] : roles)
        for (int v : ids) {
            if (v < 0 || v >= digraph.vertex_count())
                throw std::logic_error("role \"" + name + "\" names an unknown vertex");
            if (covered[v]) throw std::logic_error("vertex " + std::to_string(v) + " has two roles");
            covered[v] = 1;
        }
    for (int v = 0; v < digraph.vertex_count(); ++v)
        if (!covered[v]) throw std::logic_error("vertex " + std::to_string(v) + " has no role");
}

int Assembler::add_vertex() {
    out_.emplace_back();
    return n_++;
}

int Assembler::add_vertices(int count) {
    const int first = n_;
    for (int i = 0; i < count; ++i) add_vertex();
    return first;
}

void Assembler::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("assembler: id out of range");
    if (u == v) throw std::invalid_argument("assembler: self-loop");
    if (has_arc(u, v)) throw std::invalid_argument("assembler: duplicate arc");
    out_[u].push_back(v);
}

bool Assembler::has_arc(int u, int v) const {
    return std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end();
}

int Assembler::out_degree(int v) const { return static_cast<int>(out_[v].size()); }

std::vector<int> Assembler::splice(const GadgetInstance& gadget, const std::map<int, int>& identify) {
    const int gn = gadget.digraph.vertex_count();
    std::vector<int> map(gn, -1);
    for (auto [from, to] : identify) {
        if (from < 0 || from >= gn || to < 0 || to >= n_)
            throw std::invalid_argument("assembler: bad identification");
        map[from] = to;
    }
    for (int v = 0; v < gn; ++v)
        if (map[v] == -1) map[v] = add_vertex();
    for (auto [u, v] : gadget.digraph.arcs()) add_arc(map[u], map[v]);
    return map;
}

Digraph Assembler::build() const {
    Digraph d(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) d.add_arc(u, v);
    return d;
}

GadgetInstance make_connector(int i, int p) {
    if (i <= 0 || p <= 0) throw std::invalid_argument("connector parameters must be positive");
    GadgetInstance g;
    Assembler a;
    const int x = a.add_vertex();
    const int y = a.add_vertex();
    const int s = a.add_vertex();
    const int t0 = a.add_vertices(i);
    const int u0 = a.add_vertices(p);   // U, u = u0
    const int up0 = a.add_vertices(p);  // U', u' = up0

    for (int t = t0; t < t0 + i; ++t) {
        a.add_arc(x, t);
        for (int u = u0; u < u0 + p; ++u) a.add_arc(t, u);
    }
    for (int u = u0; u < u0 + p; ++u)
        for (int up = up0; up < up0 + p; ++up) {
            a.add_arc(u, up);
            if (!(up == up0 && u == u0)) a.add_arc(up, u);  // drop the single arc u' -> u
        }
    for (int up = up0 + 1; up < up0 + p; ++up) a.add_arc(s, up);
    a.add_arc(up0, s);
    a.add_arc(s, y);

    g.digraph = a.build();
    g.roles["x"] = {x};
    g.roles["y"] = {y};
    g.roles["s"] = {s};
    for (int t = t0; t < t0 + i; ++t) g.roles["T"].push_back(t);
    g.roles["u"] = {u0};
    for (int u = u0 + 1; u < u0 + p; ++u) g.roles["U"].push_back(u);
    g.roles["u'"] = {up0};
    for (int up = up0 + 1; up < up0 + p; ++up) g.roles["U'"].push_back(up);
    g.roles["U"];   // present even when empty (p = 1)
    g.roles["U'"];
    g.validate_roles();

    // Arc inventory check: every internal vertex emits exactly p arcs.
    if (g.digraph.vertex_count() != i + 2 * p + 3)
        throw std::logic_error("connector: vertex count off");
    for (int v = 2; v < g.digraph.vertex_count(); ++v)
        if (g.digraph.out_degree(v) != p) throw std::logic_error("connector: internal out-degree off");
    if (g.digraph.out_degree(x) != i || g.digraph.out_degree(y) != 0)
        throw std::logic_error("connector: endpoint degree off");
    return g;
}

Digraph attach_connector(const Digraph& d, int x, int y, int i, int p) {
    if (x < 0 || x >= d.vertex_count() || y < 0 || y >= d.vertex_count())
        throw std::invalid_argument("attach_connector: unknown vertex");
    Assembler a;
    a.add_vertices(d.vertex_count());
    for (auto [u, v] : d.arcs()) a.add_arc(u, v);
    a.splice(make_connector(i, p), {{0, x}, {1, y}});
    return a.build();
}

namespace {

void verify_regularized(const Digraph& original, const Digraph& result, int p) {
    const auto profile = degree_profile(result);
    if (!profile.is_k_out_regular(p + 1))
        throw std::logic_error("regularize: result is not (p+1)-out-regular");
    if (!is_strong(result)) throw std::logic_error("regularize: result is not strong");
    for (int u = 0; u < original.vertex_count(); ++u)
        for (int v = 0; v < original.vertex_count(); ++v)
            if (u != v && original.has_arc(u, v) != result.has_arc(u, v))
                throw std::logic_error("regularize: original digraph not induced intact");
}

}  // namespace

Digraph regularize(const Digraph& d, int p, RegularizeMode mode) {
    const int n = d.vertex_count();
    if (n == 0) throw std::invalid_argument("regularize: empty digraph");
    if (degree_profile(d).max_out > p) throw std::invalid_argument("regularize: max out-degree exceeds p");

    Assembler a;
    a.add_vertices(n);
    for (auto [u, v] : d.arcs()) a.add_arc(u, v);

    if (mode == RegularizeMode::chain) {
        for (int j = 0; j < n; ++j) {
            const int i = p + 1 - d.out_degree(j);
            a.splice(make_connector(i, p + 1), {{0, j}, {1, (j + 1) % n}});
        }
    } else {
        // Binary out-tree over all original vertices, then a connector along
        // every tree arc (child back up to parent). Tree arcs make each
        // connector's endpoints adjacent, which is what the k1 = 0 cases
        // need. Internal tree vertices sit at out-degree 2, so p >= 2 keeps
        // their up-connectors non-degenerate.
        if (p < 2) throw std::invalid_argument("regularize: tree mode needs p >= 2");
        struct TreeArc {
            int parent, child;
        };
        std::vector<TreeArc> tree;
        int root;
        if (n == 1) {
            root = a.add_vertex();
            a.add_arc(root, 0);
            tree.push_back({root, 0});
        } else {
            // caterpillar: internal j feeds leaf j and the next internal
            std::vector<int> internals;
            for (int j = 0; j < n - 1; ++j) internals.push_back(a.add_vertex());
            root = internals[0];
            for (int j = 0; j < n - 1; ++j) {
                a.add_arc(internals[j], j);
                tree.push_back({internals[j], j});
                if (j + 1 < n - 1) {
                    a.add_arc(internals[j], internals[j + 1]);
                    tree.push_back({internals[j], internals[j + 1]});
                } else {
                    a.add_arc(internals[j], n - 1);
                    tree.push_back({internals[j], n - 1});
                }
            }
        }
        // Every tree arc (parent, child): connector raising the child to
        // p+1; the root gets one along its first child arc.
        for (const auto& arc : tree) {
            const int need = p + 1 - a.out_degree(arc.child);
            if (need > 0) a.splice(make_connector(need, p + 1), {{0, arc.child}, {1, arc.parent}});
        }
        const int root_child = tree.front().child;
        const int need = p + 1 - a.out_degree(root);
        if (need > 0) a.splice(make_connector(need, p + 1), {{0, root}, {1, root_child}});
    }

    Digraph result = a.build();
    verify_regularized(d, result, p);
    return result;
}

Digraph rotational_tournament(int q) {
    if (q <= 0) throw std::invalid_argument("tournament order must be positive");
    Digraph t(q);
    if (q % 2 == 1) {
        for (int v = 0; v < q; ++v)
            for (int s = 1; s <= (q - 1) / 2; ++s) t.add_arc(v, (v + s) % q);
    } else {
        for (int v = 0; v < q; ++v)
            for (int s = 1; s < q / 2; ++s) t.add_arc(v, (v + s) % q);
        for (int v = 0; v < q / 2; ++v) t.add_arc(v, v + q / 2);
    }
    return t;
}

Digraph circulant(int n, const std::vector<int>& steps) {
    Digraph d(n);
    for (int v = 0; v < n; ++v)
        for (int s : steps) {
            if (s <= 0 || s >= n) throw std::invalid_argument("circulant step out of range");
            d.add_arc(v, (v + s) % n);
        }
    return d;
}

void certify_seed(const Digraph& seed, int k) {
    if (!degree_profile(seed).is_k_out_regular(k))
        throw std::invalid_argument("seed is not " + std::to_string(k) + "-out-regular");
    if (!is_strong(seed)) throw std::invalid_argument("seed is not strong");
    const auto cycle = find_even_cycle(seed, 50'000'000);
    if (cycle.outcome != EvenCycleResult::status::none)
        throw std::invalid_argument("seed has an even directed cycle (or certification ran out of budget)");
}

namespace {

bool seed_ok(const Digraph& d, int k, long long& budget_left) {
    if (!degree_profile(d).is_k_out_regular(k)) return false;
    const auto cycle = find_even_cycle(d, std::max<long long>(budget_left, 1));
    if (cycle.outcome != EvenCycleResult::status::none) return false;
    return is_strong(d);
}

// Exhaustive scan over 2-out-regular digraphs on n vertices: each vertex
// picks an ordered-by-id pair of out-neighbours.
std::optional<Digraph> exhaustive_2_out_regular(int n, long long& budget_left) {
    if (n < 3) return std::nullopt;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<int> choice(n, 0);
    // choice[v] indexes the pair of out-neighbours of v among ids != v
    std::vector<std::vector<std::pair<int, int>>> options(n);
    for (int v = 0; v < n; ++v)
        for (auto [x, y] : pairs)
            if (x != v && y != v) options[v].emplace_back(x, y);
    while (true) {
        if (--budget_left < 0) return std::nullopt;
        Digraph d(n);
        for (int v = 0; v < n; ++v) {
            d.add_arc(v, options[v][choice[v]].first);
            d.add_arc(v, options[v][choice[v]].second);
        }
        long long cert_budget = 10'000;
        if (seed_ok(d, 2, cert_budget)) return d;
        int v = n - 1;
        while (v >= 0 && choice[v] + 1 == static_cast<int>(options[v].size())) choice[v--] = 0;
        if (v < 0) return std::nullopt;
        ++choice[v];
    }
}

}  // namespace

std::optional<SeedCertificate> find_no_even_cycle_outregular(int k, int max_n, int min_n,
                                                             long long budget) {
    if (k != 1 && k != 2)
        throw unsupported_error("no even-cycle-free " + std::to_string(k) +
                                "-out-regular seed construction is available for k >= 3");
    static std::mutex cache_mutex;
    static std::map<std::tuple<int, int, int>, std::optional<SeedCertificate>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({k, max_n, min_n});
        if (it != cache.end()) return it->second;
    }

    std::optional<SeedCertificate> found;
    long long tried = 0;
    if (k == 1) {
        int n = std::max(3, min_n);
        if (n % 2 == 0) ++n;  // odd directed cycles only
        if (n <= max_n) {
            std::vector<int> steps{1};
            Digraph c = circulant(n, steps);
            certify_seed(c, 1);
            found = SeedCertificate{c, 1, "directed odd cycle C" + std::to_string(n), 1};
        }
    } else {
        long long budget_left = budget;
        // circulant candidates first, cheapest family by increasing order
        for (int n = std::max(3, min_n); n <= max_n && !found; ++n) {
            for (int a = 1; a < n && !found; ++a)
                for (int b = a + 1; b < n && !found; ++b) {
                    if ((a + b) % n == 0 || 2 * a % n == 0 || 2 * b % n == 0) continue;  // digons
                    ++tried;
                    Digraph c = circulant(n, {a, b});
                    if (seed_ok(c, 2, budget_left))
                        found = SeedCertificate{c, 2,
                                                "circulant C" + std::to_string(n) + "(" +
                                                    std::to_string(a) + "," + std::to_string(b) + ")",
                                                tried};
                }
        }
        // exhaustive fallback, increasing order
        for (int n = std::max(3, min_n); n <= max_n && !found; ++n) {
            auto d = exhaustive_2_out_regular(n, budget_left);
            if (d) found = SeedCertificate{*d, 2, "exhaustive search, order " + std::to_string(n), tried};
            if (budget_left < 0) break;
        }
    }
    if (found) certify_seed(found->digraph, k);

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[{k, max_n, min_n}] = found;
    return found;
}

GadgetInstance make_forcing_gadget(int k, const Digraph& seed) {
    certify_seed(seed, k);
    GadgetInstance g;
    Assembler a;
    const int x = a.add_vertex();
    const int xp = a.add_vertex();
    const int body0 = a.add_vertices(seed.vertex_count());
    for (auto [u, v] : seed.arcs()) a.add_arc(body0 + u, body0 + v);
    for (int v = 0; v < seed.vertex_count(); ++v) {
        a.add_arc(body0 + v, x);
        a.add_arc(body0 + v, xp);
    }
    g.digraph = a.build();
    g.roles["head"] = {x, xp};
    for (int v = 0; v < seed.vertex_count(); ++v) g.roles["body"].push_back(body0 + v);
    g.validate_roles();
    for (int v : g.roles["body"])
        if (g.digraph.out_degree(v) != k + 2) throw std::logic_error("forcing gadget: body degree off");
    return g;
}

std::pair<GadgetInstance, GadgetInstance> make_xz_forcers(int k1, int k2, const Digraph& seed) {
    if (k2 < 2 || std::max(1, k1) >= k2)
        throw std::invalid_argument("forcers need max{1, k1} < k2 and k2 >= 2");
    certify_seed(seed, k2);

    // Z: seed body saturates one part, so its head w can only take color 1.
    GadgetInstance z;
    {
        Assembler a;
        const int w = a.add_vertex();
        const int body0 = a.add_vertices(seed.vertex_count());
        for (auto [u, v] : seed.arcs()) a.add_arc(body0 + u, body0 + v);
        for (int v = 0; v < seed.vertex_count(); ++v) a.add_arc(body0 + v, w);
        z.digraph = a.build();
        z.roles["w"] = {w};
        for (int v = 0; v < seed.vertex_count(); ++v) z.roles["body"].push_back(body0 + v);
        z.validate_roles();
    }

    // X: k1+1 color-1 heads; the first one points at the other heads and at
    // v, so a color-1 v would push it past the part-1 cap.
    GadgetInstance x;
    {
        Assembler a;
        const int v = a.add_vertex();
        std::vector<int> heads;
        for (int copy = 0; copy < k1 + 1; ++copy) {
            auto map = a.splice(z, {});
            heads.push_back(map[z.roles.at("w").front()]);
            for (int b : z.roles.at("body")) x.roles["bodies"].push_back(map[b]);
        }
        for (size_t h = 1; h < heads.size(); ++h) a.add_arc(heads[0], heads[h]);
        a.add_arc(heads[0], v);
        x.digraph = a.build();
        x.roles["v"] = {v};
        x.roles["heads"] = heads;
        x.validate_roles();
    }
    return {x, z};
}

std::pair<GadgetInstance, GadgetInstance> make_kernel_gadgets() {
    GadgetInstance w;
    w.digraph = Digraph(9);
    // z1..z9 are ids 0..8
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 8}})
        w.digraph.add_arc(u, v);
    for (int q = 0; q < 9; ++q) w.roles["z" + std::to_string(q + 1)] = {q};
    w.validate_roles();
    if (w.digraph.arc_count() != 9) throw std::logic_error("kernel gadget W: arc count off");

    GadgetInstance h;
    h.digraph = Digraph(6);
    // a..f are ids 0..5
    const int a = 0, b = 1, c = 2, dd = 3, e = 4, f = 5;
    for (auto [u, v] : std::vector<std::pair<int, int>>{{dd, e},
                                                        {e, f},
                                                        {f, dd},
                                                        {dd, a},
                                                        {e, b},
                                                        {f, c},
                                                        {a, e},
                                                        {b, dd},
                                                        {b, f},
                                                        {c, dd},
                                                        {c, e}})
        h.digraph.add_arc(u, v);
    h.roles["a"] = {a};
    h.roles["b"] = {b};
    h.roles["c"] = {c};
    h.roles["d"] = {dd};
    h.roles["e"] = {e};
    h.roles["f"] = {f};
    h.validate_roles();
    if (h.digraph.arc_count() != 11) throw std::logic_error("kernel gadget H: arc count off");
    return {w, h};
}

GadgetInstance make_variable_gadget(int k1, int k2) {
    if (k1 < 0 || k2 < 2) throw std::invalid_argument("variable gadget needs k1 >= 0, k2 >= 2");
    GadgetInstance g;
    Assembler asem;
    const int v = asem.add_vertex();
    const int vbar = asem.add_vertex();
    const int a0 = asem.add_vertices(k1);
    const int b0 = asem.add_vertices(k2);
    asem.add_arc(v, vbar);
    asem.add_arc(vbar, v);
    if (k1 >= 1) {
        asem.add_arc(a0, v);
        asem.add_arc(a0, vbar);
        for (int j = 1; j < k1; ++j) asem.add_arc(a0, a0 + j);
    }
    asem.add_arc(b0, v);
    asem.add_arc(b0, vbar);
    for (int j = 1; j < k2; ++j) asem.add_arc(b0, b0 + j);

    g.digraph = asem.build();
    g.roles["v"] = {v};
    g.roles["vbar"] = {vbar};
    g.roles["a"];
    for (int j = 0; j < k1; ++j) g.roles["a"].push_back(a0 + j);
    for (int j = 0; j < k2; ++j) g.roles["b"].push_back(b0 + j);
    g.hooks["force_color1"] = g.roles["a"];
    g.hooks["force_color2"] = g.roles["b"];
    g.validate_roles();
    return g;
}

GadgetInstance make_d2_gadget(int k, int p) {
    if (k < 2 || p < 3 || p > 2 * k - 1) throw std::invalid_argument("d2 gadget needs k >= 2, 3 <= p <= 2k-1");
    const Digraph t = rotational_tournament(p - 1);
    std::vector<int> v1;  // tournament vertices of out-degree k-1
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.out_degree(v) == k - 1) v1.push_back(v);

    GadgetInstance g;
    Assembler a;
    const int x = a.add_vertex();
    const int y = a.add_vertex();
    const int t0 = a.add_vertices(p - 1);
    for (auto [u, v] : t.arcs()) a.add_arc(t0 + u, t0 + v);
    std::set<int> v1_set(v1.begin(), v1.end());
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v1_set.count(v)) {
            a.add_arc(t0 + v, x);
            a.add_arc(y, t0 + v);
        } else {
            a.add_arc(t0 + v, x);
            a.add_arc(t0 + v, y);
        }
    }
    g.digraph = a.build();
    g.roles["x"] = {x};
    g.roles["y"] = {y};
    for (int v = 0; v < t.vertex_count(); ++v) g.roles["tournament"].push_back(t0 + v);
    for (int v : v1) g.hooks["v1"].push_back(t0 + v);
    g.validate_roles();

    if (g.digraph.out_degree(x) != 0) throw std::logic_error("d2 gadget: x must be a sink");
    if (degree_profile(g.digraph).max_out > k) throw std::logic_error("d2 gadget: max out-degree above k");
    for (int u = 0; u < g.digraph.vertex_count(); ++u)
        for (int v = u + 1; v < g.digraph.vertex_count(); ++v) {
            const bool adjacent = g.digraph.has_arc(u, v) || g.digraph.has_arc(v, u);
            const bool is_xy = (u == x && v == y) || (u == y && v == x);
            if (adjacent == is_xy) throw std::logic_error("d2 gadget: adjacency pattern off");
        }
    return g;
}

}  // namespace outpart
