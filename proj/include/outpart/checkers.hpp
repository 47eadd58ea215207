#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outpart/digraph.hpp"
#include "outpart/partition.hpp"

namespace outpart {

// Certificate checkers. Each one validates a candidate witness against its
// defining inequality and reports the smallest-id violation when invalid.
// A size mismatch between digraph and partition throws std::invalid_argument.

struct AllReducingViolation {
    int vertex;
    int part;
    int inside_out_degree;  // out-neighbours of `vertex` in its own part
};

/// Valid iff d+_{D<Vi>}(v) <= max{0, d+_D(v) - k} for every vertex v.
std::optional<AllReducingViolation> check_all_reducing(const Digraph& d, const Partition& p, int k);

struct MaxReducingViolation {
    int part;
    int induced_max_out_degree;
};

/// Valid iff every part's induced maximum out-degree is <= max{0, D+(D) - k}.
/// Any partition valid for check_all_reducing is valid here as well.
std::optional<MaxReducingViolation> check_max_reducing(const Digraph& d, const Partition& p, int k);

struct DeltaBoundedViolation {
    int part;  // 0 or 1
    int induced_max_out_degree;
    int cap;
};

/// Ordered 2-partition check: induced max out-degree of part 0 <= k1 and of
/// part 1 <= k2. Callers wanting the symmetric question ask both orders.
std::optional<DeltaBoundedViolation> check_delta_bounded(const Digraph& d, const Partition& p,
                                                         int k1, int k2);

struct KernelCheckResult {
    enum class kind { valid, not_independent, not_dominated };
    kind status = kind::valid;
    int u = -1;  // arc witness for not_independent
    int v = -1;  // undominated vertex for not_dominated; arc head for not_independent

    bool valid() const { return status == kind::valid; }
    std::string to_string() const;
};

/// K must be independent (no arc inside K) and every vertex outside K needs
/// an out-neighbour in K. For 2-out-regular digraphs this is equivalent to
/// (K, V\K) passing check_delta_bounded with caps (0, 1).
KernelCheckResult check_kernel(const Digraph& d, const std::vector<int>& kernel);

struct MajorityViolation {
    int vertex;
    int same_part_out;  // exceeds d+(v)/2
};

/// Valid iff every vertex has at most d+(v)/2 out-neighbours in its own part,
/// compared as rationals (2 * same <= d+).
std::optional<MajorityViolation> check_majority_2coloring(const Digraph& d, const Partition& p);

}  // namespace outpart
