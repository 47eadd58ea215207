#pragma once

#include <string>
#include <vector>

#include "outpart/digraph.hpp"

namespace outpart {

/// Assignment of every vertex to one of `parts` parts. Parts may be empty;
/// checkers score an empty part's maximum out-degree as 0.
struct Partition {
    int parts = 0;
    std::vector<int> part_of;

    Partition() = default;
    Partition(int p, std::vector<int> assignment);

    int size() const { return static_cast<int>(part_of.size()); }
    int operator[](int v) const { return part_of[v]; }

    bool operator==(const Partition&) const = default;
};

/// Text format: one line "v part" per vertex; every id 0..n-1 exactly once.
/// `parts` defaults to max part id + 1; pass `parts_override` to allow
/// trailing empty parts.
Partition parse_partition(const std::string& text, int parts_override = -1);
std::string serialize_partition(const Partition& p);

/// Kernel file format: a single line of space-separated vertex ids.
std::vector<int> parse_vertex_set(const std::string& text);
std::string serialize_vertex_set(const std::vector<int>& vs);

}  // namespace outpart
