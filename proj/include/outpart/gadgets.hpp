#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "outpart/digraph.hpp"

namespace outpart {

using RoleMap = std::map<std::string, std::vector<int>>;

/// A digraph plus a role map tying vertex ids to their function in the
/// construction. Role sets partition the vertex set; `hooks` carry extra
/// (possibly overlapping) annotations such as "these vertices need color-1
/// forcing".
struct GadgetInstance {
    Digraph digraph;
    RoleMap roles;
    RoleMap hooks;

    /// Throws std::logic_error unless the roles partition the vertex set.
    void validate_roles() const;
};

/// Incremental digraph builder used by gadget constructors and reduction
/// compilers. Arc collisions throw, which catches construction bugs early.
class Assembler {
  public:
    int add_vertex();
    int add_vertices(int count);  // returns the first new id
    void add_arc(int u, int v);
    bool has_arc(int u, int v) const;
    int size() const { return n_; }
    int out_degree(int v) const;

    /// Splices a gadget in. Vertices present in `identify` (gadget id ->
    /// existing id) are merged, the rest become fresh vertices. Returns the
    /// full gadget-id -> new-id mapping.
    std::vector<int> splice(const GadgetInstance& gadget, const std::map<int, int>& identify = {});

    Digraph build() const;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> out_;
};

/// Connector with designated endpoints x, y: i + 2p + 3 vertices, every
/// internal vertex (T, U, U', s) of out-degree exactly p, x gains out-degree
/// i, y gains nothing, and x reaches y through the gadget. Attaching one to
/// a digraph preserves existence of (D+<=k1, D+<=k2)-partitions (for k1 = 0
/// the endpoints must be adjacent). Roles: x, y, s, T, u, U (minus u), u',
/// U' (minus u').
GadgetInstance make_connector(int i, int p);

/// Glue a fresh (i, p)-connector onto existing vertices x, y of d.
Digraph attach_connector(const Digraph& d, int x, int y, int i, int p);

enum class RegularizeMode {
    chain,  // connectors v_j -> v_{j+1} around all vertices; needs caps k1 >= 1
    tree,   // binary out-tree + connectors along tree arcs; endpoint-adjacent,
            // safe for k1 = 0
};

/// Embeds d (max out-degree <= p) as an induced subdigraph of a strong
/// (p+1)-out-regular digraph; both properties are verified before returning.
Digraph regularize(const Digraph& d, int p, RegularizeMode mode = RegularizeMode::chain);

struct SeedCertificate {
    Digraph digraph;
    int k = 0;
    std::string candidate;       // human-readable candidate name
    long long candidates_tried = 0;
};

/// Searches for a strong k-out-regular digraph with no even directed cycle,
/// certified by exhaustive cycle enumeration. k = 1 yields odd cycles;
/// k = 2 tries circulants by increasing order first (C7(1,3) certifies),
/// then exhaustive enumeration. k >= 3 is unsupported and throws.
std::optional<SeedCertificate> find_no_even_cycle_outregular(int k, int max_n = 8, int min_n = 0,
                                                             long long budget = 20'000'000);

/// Requires `seed` to certify as k-out-regular, strong, with no even cycle.
void certify_seed(const Digraph& seed, int k);

/// Head pair {x, x'} plus a body copy of a certified seed with all arcs from
/// the body to both heads. In any (D+<=k, D+<=k)-partition of a host holding
/// this gadget induced, the two head vertices land in the same part.
/// Roles: head, body.
GadgetInstance make_forcing_gadget(int k, const Digraph& seed);

/// Color forcers for the ordered caps (k1 < k2):
///  Z: body = certified k2-out-regular even-cycle-free seed, all arcs to a
///       head w; w takes color 1 (part 0) in every good coloring.
///  X: k1+1 private copies of Z whose first head points at the other heads
///       and at a vertex v; v takes color 2 (part 1) in every good coloring.
/// X roles: v, heads, bodies. Z roles: w, body.
std::pair<GadgetInstance, GadgetInstance> make_xz_forcers(int k1, int k2, const Digraph& seed);

/// The two kernel-reduction building blocks, arc inventories fixed:
/// W on z1..z9 with 9 arcs, H on a..f with 11 arcs.
std::pair<GadgetInstance, GadgetInstance> make_kernel_gadgets();

/// Variable gadget on k1 + k2 + 2 vertices: digon v <-> vbar, guard chains
/// a_1..a_{k1} (need color-1 forcing) and b_1..b_{k2} (need color-2 forcing).
/// Once the guards hold their colors, every good coloring splits {v, vbar}
/// across the two parts. Hooks: force_color1, force_color2.
GadgetInstance make_variable_gadget(int k1, int k2);

/// Same-color link on p+1 vertices for 3 <= p <= 2k-1: x and y are the only
/// non-adjacent pair, d+(x) = 0, the rest is a regular or almost regular
/// tournament; max out-degree <= k. Any proper p-coloring of the underlying
/// graph gives x and y the same color. Roles: x, y, tournament. Hook: v1
/// (the tournament vertices of out-degree k-1).
GadgetInstance make_d2_gadget(int k, int p);

/// Rotational tournament of order q: out-degrees (q-1)/2 for odd q; for even
/// q they split between q/2 and q/2 - 1 (almost regular).
Digraph rotational_tournament(int q);

/// Circulant digraph: arcs i -> i + s (mod n) for each step s.
Digraph circulant(int n, const std::vector<int>& steps);

}  // namespace outpart
