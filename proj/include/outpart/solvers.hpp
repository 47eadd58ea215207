#pragma once

#include <string>
#include <variant>
#include <vector>

#include "outpart/digraph.hpp"
#include "outpart/partition.hpp"

namespace outpart {

/// Certified non-existence: `component` is the obstructing terminal strong
/// component (re-verifiable by strong_components / classify_tournament /
/// find_even_cycle).
struct NonExistence {
    std::vector<int> component;
    std::string reason;
};

/// Even-cycle search ran out of budget somewhere; the answer is unknown and
/// must never be read as non-existence.
struct Indeterminate {};

using SolveOutcome = std::variant<Partition, NonExistence, Indeterminate>;

inline const Partition* solved(const SolveOutcome& o) { return std::get_if<Partition>(&o); }

/// 2-partition where every vertex loses at least one out-neighbour from its
/// part (unless it is a sink). Exists iff every non-trivial terminal strong
/// component contains an even directed cycle; the returned partition passes
/// check_all_reducing with k = 1.
SolveOutcome solve_one_all_2partition(const Digraph& d, long long cycle_budget = 10'000'000);

/// 2-partition dropping the maximum out-degree by one. Exists iff every
/// terminal strong component has an even directed cycle or a vertex of
/// out-degree below the global maximum (vacuously solvable when the digraph
/// has no arcs). Passes check_max_reducing with k = 1.
SolveOutcome solve_one_max_2partition(const Digraph& d, long long cycle_budget = 10'000'000);

/// Always succeeds: pick min{k, d+(v)} arcs per vertex, color the chosen
/// subdigraph's underlying graph greedily along a reverse degeneracy order.
/// Passes check_all_reducing(k) with 2k+1 parts.
Partition solve_k_all_partition_2k_plus_1(const Digraph& d, int k);

/// k >= 2 only. NonExistence exactly when some terminal strong component is a
/// k-regular tournament; otherwise a partition passing check_all_reducing(k)
/// with 2k parts, built by arc deletions, low-degree vertex removal and a
/// Brooks coloring of what remains.
SolveOutcome solve_k_all_partition_2k(const Digraph& d, int k);

/// Local search flipping any vertex with more than half of its neighbours on
/// its own side; each flip grows the cut, so it terminates.
Partition halve_degrees_undirected(const Graph& g);

}  // namespace outpart
