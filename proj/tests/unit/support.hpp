#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "outpart/digraph.hpp"
#include "outpart/partition.hpp"

namespace testsupport {

using outpart::Digraph;
using outpart::Graph;
using outpart::Partition;

inline Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
}

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

/// Rotational tournament on 5 vertices: i -> i+1, i -> i+2 (mod 5).
inline Digraph qr5() {
    Digraph d(5);
    for (int v = 0; v < 5; ++v) {
        d.add_arc(v, (v + 1) % 5);
        d.add_arc(v, (v + 2) % 5);
    }
    return d;
}

inline Digraph bidirected_complete(int n) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) d.add_arc(u, v);
    return d;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

/// All digraphs on n vertices indexed by an arc-set bitmask over the ordered
/// pairs (u, v), u != v, in (u-major, v-minor) order.
inline Digraph digraph_from_mask(int n, std::uint64_t mask) {
    Digraph d(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (mask >> bit & 1) d.add_arc(u, v);
            ++bit;
        }
    return d;
}

inline std::uint64_t digraph_mask_limit(int n) { return std::uint64_t{1} << (n * (n - 1)); }

/// Deterministic random digraph; arc probability percent/100.
inline Digraph random_digraph(std::mt19937& rng, int n, int percent) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && static_cast<int>(rng() % 100) < percent) d.add_arc(u, v);
    return d;
}

/// Deterministic random k-out-regular digraph.
inline Digraph random_out_regular(std::mt19937& rng, int n, int k) {
    Digraph d(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> others;
        for (int w = 0; w < n; ++w)
            if (w != v) others.push_back(w);
        for (int pick = 0; pick < k; ++pick) {
            const int at = rng() % others.size();
            d.add_arc(v, others[at]);
            others.erase(others.begin() + at);
        }
    }
    return d;
}

template <typename F>
void for_each_partition(int n, int parts, F&& f) {
    std::vector<int> a(n, 0);
    while (true) {
        f(Partition(parts, a));
        int i = n - 1;
        while (i >= 0 && a[i] == parts - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
}

/// Independent even-cycle oracle: enumerates every simple directed cycle as a
/// vertex subset plus a rotation and checks parity. Exponential, for tiny n.
inline bool has_even_cycle_brute(const Digraph& d) {
    const int n = d.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (members.size() < 2 || members.size() % 2 != 0) continue;
        const int s = members[0];
        std::vector<int> rest(members.begin() + 1, members.end());
        std::sort(rest.begin(), rest.end());
        do {
            bool ok = d.has_arc(s, rest[0]) && d.has_arc(rest.back(), s);
            for (size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = d.has_arc(rest[i], rest[i + 1]);
            if (ok) return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return false;
}

/// Canonical form of a tournament under vertex relabeling.
inline std::string tournament_canonical(const Digraph& t) {
    const int n = t.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code;
        code.reserve(n * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) code.push_back(t.has_arc(perm[u], perm[v]) ? '1' : '0');
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All tournaments of order n up to isomorphism, by extending the order n-1
/// list one vertex at a time. Counts match 1, 1, 2, 4, 12, 56, 456.
inline std::vector<Digraph> all_tournaments(int n) {
    if (n == 1) return {Digraph(1)};
    std::vector<Digraph> result;
    std::set<std::string> seen;
    for (const auto& t : all_tournaments(n - 1)) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            Digraph ext(n);
            for (auto [u, v] : t.arcs()) ext.add_arc(u, v);
            for (int v = 0; v < n - 1; ++v) {
                if (mask >> v & 1)
                    ext.add_arc(n - 1, v);
                else
                    ext.add_arc(v, n - 1);
            }
            if (seen.insert(tournament_canonical(ext)).second) result.push_back(ext);
        }
    }
    return result;
}

}  // namespace testsupport
