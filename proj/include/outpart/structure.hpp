#pragma once

#include <optional>
#include <vector>

#include "outpart/digraph.hpp"

namespace outpart {

struct SccComponent {
    std::vector<int> vertices;  // sorted ascending
    bool trivial = false;       // single vertex
    bool initial = false;       // no arcs entering
    bool terminal = false;      // no arcs leaving
};

/// Strong components with the classification the solvers rely on.
/// Components are numbered by their smallest vertex id, so the report is
/// deterministic and goldenable.
struct CondensationReport {
    std::vector<int> component_of;
    std::vector<SccComponent> components;

    std::vector<int> terminal_components() const;
};

CondensationReport strong_components(const Digraph& d);

bool is_strong(const Digraph& d);

/// Simple directed cycle v0 -> v1 -> ... -> v_{L-1} -> v0, vertices distinct,
/// L >= 2.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool even() const { return length() % 2 == 0; }
};

struct EvenCycleResult {
    enum class status { found, none, budget_exceeded };
    status outcome = status::none;
    Cycle cycle;  // meaningful only when found
};

/// Exhaustive simple-cycle enumeration (Johnson-style, deterministic vertex
/// order) that stops at the first even cycle. Digons are returned
/// immediately. `none` is only reported after the full enumeration ran;
/// `budget_exceeded` means indeterminate and must never be read as "no".
EvenCycleResult find_even_cycle(const Digraph& d, long long budget);

bool cycle_in_digraph(const Digraph& d, const Cycle& c);

struct DegeneracyResult {
    std::vector<int> order;  // removal order, min-degree first, ties by id
    int degeneracy = 0;
};

DegeneracyResult degeneracy_order(const Graph& g);

/// Greedy coloring along the reverse of a degeneracy order; uses at most
/// degeneracy + 1 colors.
std::vector<int> greedy_color_reverse(const Graph& g, const std::vector<int>& order);

struct BrooksResult {
    enum class status { colored, inapplicable };
    status outcome = status::inapplicable;
    std::vector<int> coloring;  // proper, at most max_degree(g) colors
};

/// Proper coloring with at most D(g) colors for connected graphs that are
/// neither complete nor an odd cycle; `inapplicable` exactly in those two
/// cases. Disconnected input is a contract violation.
BrooksResult brooks_coloring(const Graph& g);

struct TournamentClass {
    enum class regularity { regular, almost_regular, irregular };
    bool is_tournament = false;
    int order = 0;
    regularity shape = regularity::irregular;
    int k = -1;  // out-degree when regular

    bool is_regular_k(int want) const {
        return is_tournament && shape == regularity::regular && k == want;
    }
};

/// Tournament iff exactly one arc between every vertex pair (no digons).
/// regular: all out-degrees equal (forces order 2k+1); almost_regular:
/// out-degrees differ by at most one.
TournamentClass classify_tournament(const Digraph& d);

}  // namespace outpart
