#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "outpart/checkers.hpp"
#include "outpart/cnf.hpp"
#include "outpart/digraph.hpp"
#include "outpart/partition.hpp"

namespace outpart {

// Independent ground-truth engines. These only go through the checkers in
// checkers.hpp, never through the solvers, so solver results can be validated
// against them.

enum class SearchStatus { found, none, budget_exceeded };

struct PartitionSearchResult {
    SearchStatus status = SearchStatus::none;
    Partition witness;
};

struct prop_all_reducing {
    int k;
};
struct prop_max_reducing {
    int k;
};
struct prop_delta_bounded {
    int k1, k2;
};
struct prop_majority2 {};
struct prop_kernel_part {};  // part 0 must be a kernel; forces p = 2

using OracleProperty = std::variant<prop_all_reducing, prop_max_reducing, prop_delta_bounded,
                                    prop_majority2, prop_kernel_part>;

bool property_holds(const Digraph& d, const Partition& p, const OracleProperty& property);

/// Enumerates all p^n part assignments in lexicographic order and returns the
/// first checker-valid witness; `none` is exhaustive. For part-symmetric
/// properties the first vertex is pinned to part 0 (pure speedup, the
/// existence answer and the lexicographically least witness are unchanged).
/// With jobs > 1 the space is split across threads and the lexicographically
/// least witness is returned regardless of schedule.
PartitionSearchResult exhaustive_partition_search(const Digraph& d, const OracleProperty& property,
                                                  int parts, long long budget, int jobs = 1);

/// Exact backtracking kernel search with independence/domination propagation.
/// Returns the lexicographically least kernel (as a sorted id sequence).
std::optional<std::vector<int>> kernel_search(const Digraph& d);

/// All kernels, up to `limit` of them (deterministic order).
std::vector<std::vector<int>> enumerate_kernels(const Digraph& d, int limit);

/// Exact SAT / monotone-NAE-SAT by enumeration; guard n <= 24.
std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& f);

struct ColoringSearchResult {
    SearchStatus status = SearchStatus::none;
    std::vector<int> coloring;
};

/// Exact proper-coloring backtracking, lexicographically least witness.
ColoringSearchResult coloring_brute_force(const Graph& g, int colors, long long budget);

/// Exact search for a 2-coloring whose partition passes
/// check_delta_bounded(k1, k2), with cap-saturation propagation. Handles
/// instances far too large for the 2^n enumerator as long as they are
/// rigidly constrained (the reduction artifacts are). `assumptions` pins
/// vertex -> part before the search starts.
PartitionSearchResult pruned_delta_search(const Digraph& d, int k1, int k2,
                                          const std::vector<std::pair<int, int>>& assumptions,
                                          long long budget);

}  // namespace outpart
