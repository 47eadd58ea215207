#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "outpart/cnf.hpp"
#include "outpart/digraph.hpp"
#include "outpart/gadgets.hpp"
#include "outpart/partition.hpp"

namespace outpart {

struct Provenance {
    std::string reduction;
    std::map<std::string, int> params;
};

/// A compiled instance: digraph plus a role label per vertex (total and
/// injective) and the parameters it was compiled with. Structural
/// postconditions (strongness, out-regularity, degree caps) are verified by
/// the compilers before an artifact is returned.
struct ReductionArtifact {
    Digraph digraph;
    RoleMap roles;
    Provenance provenance;

    void validate_roles() const;
};

/// Where a connector landed inside an artifact; enough to extend a coloring
/// of the host across it.
struct ConnectorEmbed {
    int x = -1, y = -1, s = -1, u = -1, uprime = -1;
    std::vector<int> T, U, Uprime;  // U excludes u, Uprime excludes uprime
};

/// Extends part[] over one connector, given part[x] already set: x in part 0
/// sends {U, u, s} to part 0 and {T, U', u'} to part 1; x in part 1 mirrors.
void fill_connector(const ConnectorEmbed& c, std::vector<int>& part);

// --- 3-SAT -> (D+<=k1, D+<=k2)-partition -----------------------------------

struct DeltaReduction {
    ReductionArtifact artifact;
    int k1 = 0, k2 = 0;
    std::vector<int> pos_literal;  // variable -> vertex of v_i
    std::vector<int> neg_literal;  // variable -> vertex of vbar_i
    std::vector<int> part0_core;   // vertices colored part 0 by the intended coloring
    std::vector<int> part1_core;   // vertices colored part 1 (forcer bodies, clause vertices, ...)
    std::vector<ConnectorEmbed> connectors;  // fill order
};

/// Strong (k2+1)-out-regular artifact with a good (D+<=k1, D+<=k2)-coloring
/// iff the formula is satisfiable. Requires max{1, k1} < k2; k2 = 2 works
/// out of the box (the certified 2-out-regular even-cycle-free seed), bigger
/// k2 throws unsupported_error.
DeltaReduction reduce_sat_to_delta_partition(const CnfFormula& f, int k1, int k2);

Partition delta_partition_from_assignment(const DeltaReduction& r, const std::vector<bool>& assignment);
std::vector<bool> delta_assignment_from_partition(const DeltaReduction& r, const Partition& p);

// --- 3-SAT -> kernel ---------------------------------------------------------

struct KernelReduction {
    ReductionArtifact artifact;
    bool strong_variant = false;
    int clause_count = 0;  // after odd-m normalization
    std::vector<int> pos_literal, neg_literal;
    std::vector<std::array<int, 9>> clause_core;            // z1..z9 per clause
    std::vector<std::array<int, 3>> clause_literal_vertex;  // per literal position
    std::vector<std::array<Literal, 3>> clause_literals;    // normalized clause list
    // strong-variant extras
    std::array<int, 6> anchor{-1, -1, -1, -1, -1, -1};  // a, b, c, d, e, f
    std::vector<int> spine;                              // a_1..a_m, a_1 == anchor a
};

/// Base variant: 9m + 2n vertices, kernel iff satisfiable. Strong variant
/// additionally embeds the 6-vertex anchor and a clause spine and is
/// verified strong and 2-out-regular. Even clause counts are normalized by
/// duplicating the last clause.
KernelReduction reduce_sat_to_kernel(const CnfFormula& f, bool strong_variant);

std::vector<int> kernel_from_assignment(const KernelReduction& r, const std::vector<bool>& assignment);
std::vector<bool> assignment_from_kernel(const KernelReduction& r, const std::vector<int>& kernel);

// --- monotone NAE -> (D+<=k, D+<=k)-partition --------------------------------

struct NaeReduction {
    ReductionArtifact artifact;
    int k = 0;
    std::vector<std::vector<int>> variable_occurrences;  // variable -> occurrence vertices, clause order
    std::vector<std::vector<int>> clause_occurrences;    // clause -> k+2 occurrence vertices
    std::vector<int> t_vertex;                           // clause -> collector vertex
    std::vector<std::vector<int>> body_of_variable;      // variable -> all forcing-gadget body ids
    std::vector<int> u_vertices;
    std::vector<ConnectorEmbed> connectors;
};

/// Strong (k+2)-out-regular artifact with a (D+<=k, D+<=k)-partition iff the
/// monotone NAE formula (clauses of size k+2, distinct variables per clause)
/// is NAE-satisfiable. k in {1, 2}; larger k throws unsupported_error.
NaeReduction reduce_nae_to_kk_partition(const CnfFormula& f, int k);

Partition nae_partition_from_assignment(const NaeReduction& r, const std::vector<bool>& assignment);
std::vector<bool> nae_assignment_from_partition(const NaeReduction& r, const Partition& p);

// --- p-colorability -> k-max-out-degree-reducing p-partition -----------------

struct ColoringReduction {
    ReductionArtifact artifact;
    int k = 0, p = 0;
    int graph_order = 0;
    std::vector<std::vector<int>> slot;                  // copy i -> slot j -> vertex
    std::vector<std::vector<std::vector<int>>> link_tournament;  // copy i -> link -> ids
};

/// Artifact with max out-degree <= k whose k-max-reducing p-partitions
/// correspond to proper p-colorings of the input graph. 3 <= p <= 2k-1.
ColoringReduction reduce_coloring_to_reducing_partition(const Graph& g, int k, int p);

Partition coloring_partition_from_coloring(const ColoringReduction& r, const std::vector<int>& g_coloring);
std::vector<int> coloring_from_partition(const ColoringReduction& r, const Partition& p);

}  // namespace outpart
