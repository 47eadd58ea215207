#include "outpart/reductions.hpp"

#include <algorithm>
#include <set>

#include "outpart/checkers.hpp"
#include "outpart/structure.hpp"

namespace outpart {

void ReductionArtifact::validate_roles() const {
    std::vector<char> covered(digraph.vertex_count(), 0);
    for (const auto& [name, ids] : roles)
        for (int v : ids) {
            if (v < 0 || v >= digraph.vertex_count())
                throw std::logic_error("artifact role \"" + name + "\" names an unknown vertex");
            if (covered[v]) throw std::logic_error("artifact vertex " + std::to_string(v) + " has two roles");
            covered[v] = 1;
        }
    for (int v = 0; v < digraph.vertex_count(); ++v)
        if (!covered[v]) throw std::logic_error("artifact vertex " + std::to_string(v) + " has no role");
}

void fill_connector(const ConnectorEmbed& c, std::vector<int>& part) {
    if (part[c.x] != 0 && part[c.x] != 1) throw std::logic_error("fill_connector: x uncolored");
    const int px = part[c.x];
    const int side_u = px == 0 ? 0 : 1;   // U, u, s follow x's part
    const int side_t = 1 - side_u;        // T, U', u' take the other part
    for (int v : c.T) part[v] = side_t;
    for (int v : c.Uprime) part[v] = side_t;
    part[c.uprime] = side_t;
    for (int v : c.U) part[v] = side_u;
    part[c.u] = side_u;
    part[c.s] = side_u;
}

namespace {

void note_role(RoleMap& roles, const std::string& name, int v) { roles[name].push_back(v); }

ConnectorEmbed embed_connector(Assembler& a, RoleMap& roles, const std::string& prefix, int x, int y,
                               int i, int p) {
    const auto gadget = make_connector(i, p);
    const auto map = a.splice(gadget, {{gadget.roles.at("x").front(), x}, {gadget.roles.at("y").front(), y}});
    ConnectorEmbed embed;
    embed.x = x;
    embed.y = y;
    embed.s = map[gadget.roles.at("s").front()];
    embed.u = map[gadget.roles.at("u").front()];
    embed.uprime = map[gadget.roles.at("u'").front()];
    for (int v : gadget.roles.at("T")) embed.T.push_back(map[v]);
    for (int v : gadget.roles.at("U")) embed.U.push_back(map[v]);
    for (int v : gadget.roles.at("U'")) embed.Uprime.push_back(map[v]);
    note_role(roles, prefix + ".s", embed.s);
    note_role(roles, prefix + ".u", embed.u);
    note_role(roles, prefix + ".u'", embed.uprime);
    for (int v : embed.T) note_role(roles, prefix + ".T", v);
    for (int v : embed.U) note_role(roles, prefix + ".U", v);
    for (int v : embed.Uprime) note_role(roles, prefix + ".U'", v);
    return embed;
}

// Caterpillar out-tree over `leaves` rooted at a fresh vertex; arcs are real.
// Returns (root, internal ids, (parent, child) arcs).
struct OutTree {
    int root = -1;
    std::vector<int> internals;
    std::vector<std::pair<int, int>> arcs;
};

OutTree build_out_tree(Assembler& a, RoleMap& roles, const std::string& prefix,
                       const std::vector<int>& leaves) {
    OutTree tree;
    if (leaves.empty()) throw std::logic_error("out-tree needs at least one leaf");
    if (leaves.size() == 1) {
        tree.root = a.add_vertex();
        note_role(roles, prefix + ".internal", tree.root);
        tree.internals.push_back(tree.root);
        a.add_arc(tree.root, leaves[0]);
        tree.arcs.emplace_back(tree.root, leaves[0]);
        return tree;
    }
    const int count = static_cast<int>(leaves.size()) - 1;
    for (int j = 0; j < count; ++j) {
        const int v = a.add_vertex();
        tree.internals.push_back(v);
        note_role(roles, prefix + ".internal", v);
    }
    tree.root = tree.internals[0];
    for (int j = 0; j < count; ++j) {
        a.add_arc(tree.internals[j], leaves[j]);
        tree.arcs.emplace_back(tree.internals[j], leaves[j]);
        if (j + 1 < count) {
            a.add_arc(tree.internals[j], tree.internals[j + 1]);
            tree.arcs.emplace_back(tree.internals[j], tree.internals[j + 1]);
        } else {
            a.add_arc(tree.internals[j], leaves[count]);
            tree.arcs.emplace_back(tree.internals[j], leaves[count]);
        }
    }
    return tree;
}

const Digraph& delta_seed(int k2) {
    if (k2 != 2)
        throw unsupported_error("k2 = " + std::to_string(k2) +
                                " needs a certified even-cycle-free " + std::to_string(k2) +
                                "-out-regular seed; only k2 = 2 is available");
    static const Digraph seed = [] {
        auto found = find_no_even_cycle_outregular(2);
        if (!found) throw unsupported_error("no certified 2-out-regular even-cycle-free seed found");
        return found->digraph;
    }();
    return seed;
}

}  // namespace

DeltaReduction reduce_sat_to_delta_partition(const CnfFormula& f, int k1, int k2) {
    f.validate();
    if (f.mode != CnfMode::plain3sat) throw std::invalid_argument("delta reduction expects plain 3-SAT");
    if (k1 < 0 || std::max(1, k1) >= k2)
        throw std::invalid_argument("delta reduction needs max{1, k1} < k2");
    const Digraph& seed = delta_seed(k2);
    const auto [x_gadget, z_gadget] = make_xz_forcers(k1, k2, seed);

    DeltaReduction r;
    r.k1 = k1;
    r.k2 = k2;
    Assembler a;
    RoleMap roles;

    // Private forcers sit right behind the host they force, so an id-ordered
    // backtracking search meets the forcing constraint as soon as the host is
    // colored. Gadget bodies land in part 1, the forcer heads of X copies in
    // part 0; the designated entry vertex of every seed copy later becomes an
    // out-tree leaf so the interiors are reachable.
    std::vector<int> entries;
    int forcer_seq = 0;
    auto attach_z = [&](int host) {
        const std::string pre = "z" + std::to_string(forcer_seq++);
        const auto map = a.splice(z_gadget, {{z_gadget.roles.at("w").front(), host}});
        std::vector<int> body;
        for (int g : z_gadget.roles.at("body")) body.push_back(map[g]);
        entries.push_back(*std::min_element(body.begin(), body.end()));
        for (int v : body) {
            note_role(roles, pre + ".body", v);
            r.part1_core.push_back(v);
        }
        r.part0_core.push_back(host);
    };
    auto attach_x = [&](int host) {
        const std::string pre = "x" + std::to_string(forcer_seq++);
        const auto map = a.splice(x_gadget, {{x_gadget.roles.at("v").front(), host}});
        for (int g : x_gadget.roles.at("heads")) {
            note_role(roles, pre + ".head", map[g]);
            r.part0_core.push_back(map[g]);
        }
        // one entry per seed copy inside the X gadget
        const auto& bodies = x_gadget.roles.at("bodies");
        const int per_copy = seed.vertex_count();
        for (size_t start = 0; start < bodies.size(); start += per_copy) {
            int entry = map[bodies[start]];
            for (int off = 0; off < per_copy; ++off) entry = std::min(entry, map[bodies[start + off]]);
            entries.push_back(entry);
        }
        for (int g : bodies) {
            note_role(roles, pre + ".body", map[g]);
            r.part1_core.push_back(map[g]);
        }
        r.part1_core.push_back(host);
    };

    // Variable gadgets with their guard forcers.
    const auto var_gadget = make_variable_gadget(k1, k2);
    for (int i = 0; i < f.vars; ++i) {
        const auto map = a.splice(var_gadget, {});
        const std::string pre = "var" + std::to_string(i);
        const int v = map[var_gadget.roles.at("v").front()];
        const int vbar = map[var_gadget.roles.at("vbar").front()];
        r.pos_literal.push_back(v);
        r.neg_literal.push_back(vbar);
        note_role(roles, pre + ".v", v);
        note_role(roles, pre + ".vbar", vbar);
        for (int g : var_gadget.hooks.at("force_color1")) {
            note_role(roles, pre + ".a", map[g]);
            attach_z(map[g]);
        }
        for (int g : var_gadget.hooks.at("force_color2")) {
            note_role(roles, pre + ".b", map[g]);
            attach_x(map[g]);
        }
    }

    // Clause vertices: arcs to the distinct literal vertices plus enough
    // forced-part-1 pad vertices to make "all named literals in part 1"
    // overflow the cap.
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        const std::string pre = "clause" + std::to_string(j);
        std::vector<int> targets;
        for (const auto& lit : f.clauses[j]) {
            const int vertex = lit.positive ? r.pos_literal[lit.var] : r.neg_literal[lit.var];
            if (std::find(targets.begin(), targets.end(), vertex) == targets.end())
                targets.push_back(vertex);
        }
        const int c = a.add_vertex();
        note_role(roles, pre + ".c", c);
        attach_x(c);
        const int pads = k2 + 1 - static_cast<int>(targets.size());
        for (int t = 0; t < pads; ++t) {
            const int pad = a.add_vertex();
            note_role(roles, pre + ".pad", pad);
            a.add_arc(c, pad);
            attach_x(pad);
        }
        for (int vertex : targets) a.add_arc(c, vertex);
    }

    // Reachability tree + degree-completing connectors along its arcs.
    std::vector<int> lows;
    for (int v = 0; v < a.size(); ++v)
        if (a.out_degree(v) < k2 + 1) lows.push_back(v);
    std::vector<int> leaves = lows;
    leaves.insert(leaves.end(), entries.begin(), entries.end());
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    const auto tree = build_out_tree(a, roles, "tree", leaves);
    for (int v : tree.internals) r.part1_core.push_back(v);

    std::vector<std::pair<int, int>> plan;  // (vertex, partner)
    for (auto [parent, child] : tree.arcs)
        if (a.out_degree(child) < k2 + 1) plan.emplace_back(child, parent);
    plan.emplace_back(tree.root, tree.arcs.front().second);
    std::sort(plan.begin(), plan.end());
    int conn_seq = 0;
    for (auto [v, partner] : plan) {
        const int need = k2 + 1 - a.out_degree(v);
        if (need <= 0) continue;
        r.connectors.push_back(embed_connector(a, roles, "conn" + std::to_string(conn_seq++), v,
                                               partner, need, k2 + 1));
    }

    r.artifact.digraph = a.build();
    r.artifact.roles = std::move(roles);
    r.artifact.provenance = {"sat_to_delta_partition",
                             {{"k1", k1},
                              {"k2", k2},
                              {"variables", f.vars},
                              {"clauses", static_cast<int>(f.clauses.size())}}};
    r.artifact.validate_roles();

    if (!degree_profile(r.artifact.digraph).is_k_out_regular(k2 + 1))
        throw std::logic_error("delta reduction: artifact is not (k2+1)-out-regular");
    if (!is_strong(r.artifact.digraph)) throw std::logic_error("delta reduction: artifact is not strong");
    return r;
}

Partition delta_partition_from_assignment(const DeltaReduction& r, const std::vector<bool>& assignment) {
    const int n = r.artifact.digraph.vertex_count();
    std::vector<int> part(n, -1);
    for (size_t i = 0; i < r.pos_literal.size(); ++i) {
        part[r.pos_literal[i]] = assignment.at(i) ? 0 : 1;
        part[r.neg_literal[i]] = assignment.at(i) ? 1 : 0;
    }
    for (int v : r.part0_core) part[v] = 0;
    for (int v : r.part1_core) part[v] = 1;
    for (const auto& c : r.connectors) fill_connector(c, part);
    for (int v = 0; v < n; ++v)
        if (part[v] == -1) throw std::logic_error("delta translation left a vertex unassigned");
    Partition p(2, std::move(part));
    if (check_delta_bounded(r.artifact.digraph, p, r.k1, r.k2).has_value())
        throw std::invalid_argument("assignment does not satisfy the formula");
    return p;
}

std::vector<bool> delta_assignment_from_partition(const DeltaReduction& r, const Partition& p) {
    std::vector<bool> assignment(r.pos_literal.size());
    for (size_t i = 0; i < r.pos_literal.size(); ++i) assignment[i] = p.part_of[r.pos_literal[i]] == 0;
    return assignment;
}

KernelReduction reduce_sat_to_kernel(const CnfFormula& f, bool strong_variant) {
    f.validate();
    if (f.mode != CnfMode::plain3sat) throw std::invalid_argument("kernel reduction expects plain 3-SAT");
    if (f.clauses.empty()) throw std::invalid_argument("kernel reduction needs at least one clause");

    std::vector<Clause> clauses = f.clauses;
    if (clauses.size() % 2 == 0) clauses.push_back(clauses.back());  // odd clause count
    const int m = static_cast<int>(clauses.size());

    KernelReduction r;
    r.strong_variant = strong_variant;
    r.clause_count = m;

    Assembler a;
    RoleMap roles;
    const auto [w_gadget, h_gadget] = make_kernel_gadgets();

    for (int j = 0; j < m; ++j) {
        const auto map = a.splice(w_gadget, {});
        std::array<int, 9> core;
        for (int q = 0; q < 9; ++q) {
            core[q] = map[w_gadget.roles.at("z" + std::to_string(q + 1)).front()];
            note_role(roles, "clause" + std::to_string(j) + ".z" + std::to_string(q + 1), core[q]);
        }
        r.clause_core.push_back(core);
    }
    // The strong variant materializes occurring variables only: a digon no
    // clause points at would be unreachable.
    std::vector<char> occurs(f.vars, 0);
    for (const auto& clause : clauses)
        for (const auto& lit : clause) occurs[lit.var] = 1;
    for (int i = 0; i < f.vars; ++i) {
        if (strong_variant && !occurs[i]) {
            r.pos_literal.push_back(-1);
            r.neg_literal.push_back(-1);
            continue;
        }
        const int v = a.add_vertex();
        const int vbar = a.add_vertex();
        a.add_arc(v, vbar);
        a.add_arc(vbar, v);
        r.pos_literal.push_back(v);
        r.neg_literal.push_back(vbar);
        note_role(roles, "var" + std::to_string(i) + ".v", v);
        note_role(roles, "var" + std::to_string(i) + ".vbar", vbar);
    }
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> lits{};
        std::array<Literal, 3> ls{};
        for (int q = 0; q < 3; ++q) {
            ls[q] = clauses[j][q];
            lits[q] = ls[q].positive ? r.pos_literal[ls[q].var] : r.neg_literal[ls[q].var];
        }
        r.clause_literals.push_back(ls);
        r.clause_literal_vertex.push_back(lits);
        // first literal from z8, second and third from z9 (duplicates collapse)
        a.add_arc(r.clause_core[j][7], lits[0]);
        if (!a.has_arc(r.clause_core[j][8], lits[1])) a.add_arc(r.clause_core[j][8], lits[1]);
        if (!a.has_arc(r.clause_core[j][8], lits[2])) a.add_arc(r.clause_core[j][8], lits[2]);
    }

    if (strong_variant) {
        const int base_size = a.size();
        std::vector<int> low;  // out-degree exactly 1 in the base digraph
        for (int v = 0; v < base_size; ++v)
            if (a.out_degree(v) == 1) low.push_back(v);

        // Anchor: the 6-vertex block H minus its a->e arc (the spine and
        // per-clause arcs below bring `a` to out-degree 2 already; the kernel
        // argument never uses a->e).
        std::map<std::string, int> h;
        for (const char* name : {"a", "b", "c", "d", "e", "f"}) {
            h[name] = a.add_vertex();
            note_role(roles, std::string("anchor.") + name, h[name]);
        }
        for (auto [from, to] : std::vector<std::pair<const char*, const char*>>{
                 {"d", "e"}, {"e", "f"}, {"f", "d"}, {"d", "a"}, {"e", "b"}, {"f", "c"},
                 {"b", "d"}, {"b", "f"}, {"c", "d"}, {"c", "e"}})
            a.add_arc(h[from], h[to]);
        r.anchor = {h["a"], h["b"], h["c"], h["d"], h["e"], h["f"]};

        r.spine.push_back(h["a"]);
        for (int j = 1; j < m; ++j) {
            const int aj = a.add_vertex();
            note_role(roles, "spine.a" + std::to_string(j + 1), aj);
            a.add_arc(r.spine.back(), aj);
            r.spine.push_back(aj);
        }
        a.add_arc(r.spine.back(), r.clause_core[m - 1][2]);          // a_m -> z_{m,3}
        for (int j = 0; j < m; ++j) a.add_arc(r.spine[j], r.clause_core[j][0]);  // a_j -> z_{j,1}
        for (int v : low) a.add_arc(v, h["d"]);
    }

    r.artifact.digraph = a.build();
    r.artifact.roles = std::move(roles);
    r.artifact.provenance = {"sat_to_kernel",
                             {{"strong", strong_variant ? 1 : 0},
                              {"variables", f.vars},
                              {"clauses", m}}};
    r.artifact.validate_roles();

    if (strong_variant) {
        if (!degree_profile(r.artifact.digraph).is_k_out_regular(2))
            throw std::logic_error("kernel reduction: strong variant is not 2-out-regular");
        if (!is_strong(r.artifact.digraph))
            throw std::logic_error("kernel reduction: strong variant is not strong");
    } else if (degree_profile(r.artifact.digraph).max_out > 2) {
        throw std::logic_error("kernel reduction: base variant exceeds out-degree 2");
    }
    return r;
}

std::vector<int> kernel_from_assignment(const KernelReduction& r, const std::vector<bool>& assignment) {
    std::set<int> kernel;
    for (size_t i = 0; i < r.pos_literal.size(); ++i) {
        if (r.pos_literal[i] < 0) continue;  // variable absent from the artifact
        kernel.insert(assignment.at(i) ? r.pos_literal[i] : r.neg_literal[i]);
    }
    for (int j = 0; j < r.clause_count; ++j) {
        const auto& core = r.clause_core[j];
        const auto& ls = r.clause_literals[j];
        const bool t1 = assignment.at(ls[0].var) == ls[0].positive;
        const bool t2 = assignment.at(ls[1].var) == ls[1].positive;
        const bool t3 = assignment.at(ls[2].var) == ls[2].positive;
        if (!(t1 || t2 || t3)) throw std::invalid_argument("assignment does not satisfy the formula");
        kernel.insert(core[1]);  // z2
        kernel.insert(core[3]);  // z4
        if (t1 && (t2 || t3)) {
            kernel.insert(core[5]);  // z6
            kernel.insert(core[6]);  // z7
        } else if (t1) {
            kernel.insert(core[5]);  // z6
            kernel.insert(core[8]);  // z9
        } else {
            kernel.insert(core[6]);  // z7
            kernel.insert(core[7]);  // z8
        }
    }
    if (r.strong_variant) {
        kernel.insert(r.anchor[1]);  // b
        kernel.insert(r.anchor[2]);  // c
        for (size_t idx = 0; idx < r.spine.size(); idx += 2) kernel.insert(r.spine[idx]);  // odd a_j
    }
    return {kernel.begin(), kernel.end()};
}

std::vector<bool> assignment_from_kernel(const KernelReduction& r, const std::vector<int>& kernel) {
    std::set<int> k(kernel.begin(), kernel.end());
    std::vector<bool> assignment(r.pos_literal.size(), false);
    for (size_t i = 0; i < r.pos_literal.size(); ++i)
        if (r.pos_literal[i] >= 0) assignment[i] = k.count(r.pos_literal[i]) > 0;
    return assignment;
}

NaeReduction reduce_nae_to_kk_partition(const CnfFormula& f, int k) {
    f.validate();
    if (f.mode != CnfMode::monotone_nae)
        throw std::invalid_argument("NAE reduction expects a monotone NAE formula");
    if (k != 1 && k != 2)
        throw unsupported_error("NAE reduction needs a certified even-cycle-free " +
                                std::to_string(k) + "-out-regular seed; only k in {1, 2} is available");
    for (const auto& clause : f.clauses) {
        if (static_cast<int>(clause.size()) != k + 2)
            throw std::invalid_argument("NAE reduction compiles clauses of size k+2 = " +
                                        std::to_string(k + 2));
        std::set<int> vars;
        for (const auto& lit : clause) vars.insert(lit.var);
        if (static_cast<int>(vars.size()) != k + 2)
            throw std::invalid_argument("NAE clause repeats a variable; occurrence vertices must be distinct");
    }
    if (f.clauses.empty()) throw std::invalid_argument("NAE reduction needs at least one clause");

    auto seed_found = find_no_even_cycle_outregular(k);
    if (!seed_found) throw unsupported_error("no certified seed for k = " + std::to_string(k));
    const Digraph& seed = seed_found->digraph;
    const auto forcing = make_forcing_gadget(k, seed);

    NaeReduction r;
    r.k = k;
    Assembler a;
    RoleMap roles;
    const int m = static_cast<int>(f.clauses.size());
    r.variable_occurrences.resize(f.vars);
    r.body_of_variable.resize(f.vars);

    std::vector<std::vector<int>> occurrence_clauses(f.vars);  // J(i), ascending
    for (int j = 0; j < m; ++j)
        for (const auto& lit : f.clauses[j]) occurrence_clauses[lit.var].push_back(j);

    // Variable-major layout: each variable's occurrence vertices followed
    // immediately by its forcing chain, so an id-ordered backtracking search
    // sees the tie between occurrences as early as possible.
    std::vector<std::vector<int>> clause_occ(m);
    std::vector<std::pair<int, std::vector<int>>> y_sets;  // (smallest body id, body)
    for (int i = 0; i < f.vars; ++i) {
        for (int j : occurrence_clauses[i]) {
            const int v = a.add_vertex();
            note_role(roles, "var" + std::to_string(i) + ".occ" + std::to_string(j), v);
            r.variable_occurrences[i].push_back(v);
        }
        const auto& occ = r.variable_occurrences[i];
        for (size_t q = 0; q + 1 < occ.size(); ++q) {
            const auto map = a.splice(forcing, {{forcing.roles.at("head")[0], occ[q]},
                                                {forcing.roles.at("head")[1], occ[q + 1]}});
            std::vector<int> body;
            for (int g : forcing.roles.at("body")) body.push_back(map[g]);
            for (int v : body) {
                note_role(roles, "var" + std::to_string(i) + ".Y" + std::to_string(q), v);
                r.body_of_variable[i].push_back(v);
            }
            y_sets.emplace_back(*std::min_element(body.begin(), body.end()), body);
        }
    }
    // clause -> occurrence vertices, in literal order; occurrences were
    // created in ascending clause order per variable
    for (int j = 0; j < m; ++j)
        for (const auto& lit : f.clauses[j]) {
            const auto& js = occurrence_clauses[lit.var];
            const size_t pos = std::lower_bound(js.begin(), js.end(), j) - js.begin();
            clause_occ[j].push_back(r.variable_occurrences[lit.var][pos]);
        }
    r.clause_occurrences = clause_occ;

    // clause collectors and occurrence cliques
    for (int j = 0; j < m; ++j) {
        const int t = a.add_vertex();
        note_role(roles, "clause" + std::to_string(j) + ".t", t);
        r.t_vertex.push_back(t);
        for (int u : clause_occ[j]) a.add_arc(u, t);
        for (int u : clause_occ[j])
            for (int v : clause_occ[j])
                if (u != v) a.add_arc(u, v);
    }

    // strongness scaffolding: one entry vertex per forcing-gadget body, all
    // chained through U
    const int entry_count = std::max<int>(1, static_cast<int>(y_sets.size()));
    for (int q = 0; q < entry_count; ++q) {
        const int u = a.add_vertex();
        note_role(roles, "u" + std::to_string(q + 1), u);
        r.u_vertices.push_back(u);
    }
    int conn_seq = 0;
    auto connect = [&](int x, int y, int i) {
        r.connectors.push_back(
            embed_connector(a, roles, "conn" + std::to_string(conn_seq++), x, y, i, k + 2));
    };
    for (int q = 0; q < entry_count; ++q) {
        const int target = y_sets.empty() ? clause_occ[0][0] : y_sets[q].first;
        connect(r.u_vertices[q], target, 1);
        connect(r.u_vertices[q], r.u_vertices[(q + 1) % entry_count], k + 1);
    }
    for (int j = 0; j < m; ++j) connect(r.t_vertex[j], r.u_vertices[0], k + 2);

    r.artifact.digraph = a.build();
    r.artifact.roles = std::move(roles);
    r.artifact.provenance = {"nae_to_kk_partition",
                             {{"k", k}, {"variables", f.vars}, {"clauses", m}}};
    r.artifact.validate_roles();

    if (!degree_profile(r.artifact.digraph).is_k_out_regular(k + 2))
        throw std::logic_error("NAE reduction: artifact is not (k+2)-out-regular");
    if (!is_strong(r.artifact.digraph)) throw std::logic_error("NAE reduction: artifact is not strong");
    return r;
}

Partition nae_partition_from_assignment(const NaeReduction& r, const std::vector<bool>& assignment) {
    const int n = r.artifact.digraph.vertex_count();
    std::vector<int> part(n, -1);
    for (size_t i = 0; i < r.variable_occurrences.size(); ++i) {
        const int side = assignment.at(i) ? 0 : 1;
        for (int v : r.variable_occurrences[i]) part[v] = side;
        for (int v : r.body_of_variable[i]) part[v] = 1 - side;
    }
    for (size_t j = 0; j < r.t_vertex.size(); ++j) {
        int count[2] = {0, 0};
        for (int v : r.clause_occurrences[j]) ++count[part[v]];
        if (count[0] == 0 || count[1] == 0)
            throw std::invalid_argument("assignment is not NAE-satisfying");
        int side = 0;
        if (count[0] == 1)
            side = 0;
        else if (count[1] == 1)
            side = 1;
        part[r.t_vertex[j]] = side;
    }
    for (int v : r.u_vertices) part[v] = 1;
    for (const auto& c : r.connectors) fill_connector(c, part);
    for (int v = 0; v < n; ++v)
        if (part[v] == -1) throw std::logic_error("NAE translation left a vertex unassigned");
    Partition p(2, std::move(part));
    if (check_delta_bounded(r.artifact.digraph, p, r.k, r.k).has_value())
        throw std::logic_error("NAE translation produced an invalid partition");
    return p;
}

std::vector<bool> nae_assignment_from_partition(const NaeReduction& r, const Partition& p) {
    std::vector<bool> assignment(r.variable_occurrences.size());
    for (size_t i = 0; i < r.variable_occurrences.size(); ++i) {
        if (r.variable_occurrences[i].empty()) continue;  // unused variable
        assignment[i] = p.part_of[r.variable_occurrences[i].front()] == 0;
    }
    return assignment;
}

ColoringReduction reduce_coloring_to_reducing_partition(const Graph& g, int k, int p) {
    if (k < 2 || p < 3 || p > 2 * k - 1)
        throw std::invalid_argument("coloring reduction needs k >= 2 and 3 <= p <= 2k-1");
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("coloring reduction needs a non-empty graph");

    ColoringReduction r;
    r.k = k;
    r.p = p;
    r.graph_order = n;
    Assembler a;
    RoleMap roles;
    const auto d2 = make_d2_gadget(k, p);
    const int x_id = d2.roles.at("x").front();
    const int y_id = d2.roles.at("y").front();

    r.slot.assign(n, std::vector<int>(n, -1));
    r.link_tournament.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            r.slot[i][j] = a.add_vertex();
            note_role(roles, "copy" + std::to_string(i) + ".slot" + std::to_string(j), r.slot[i][j]);
        }
        for (int t = 0; t + 1 < n; ++t) {
            const auto map = a.splice(d2, {{x_id, r.slot[i][t]}, {y_id, r.slot[i][t + 1]}});
            std::vector<int> ids;
            for (int v : d2.roles.at("tournament")) {
                ids.push_back(map[v]);
                note_role(roles,
                          "copy" + std::to_string(i) + ".link" + std::to_string(t) + ".tournament",
                          map[v]);
            }
            r.link_tournament[i].push_back(ids);
        }
    }
    for (auto [i, j] : g.edges()) a.add_arc(r.slot[i][j], r.slot[j][i]);  // i < j

    r.artifact.digraph = a.build();
    r.artifact.roles = std::move(roles);
    r.artifact.provenance = {"coloring_to_reducing_partition",
                             {{"k", k}, {"p", p}, {"graph_order", n}, {"edges", g.edge_count()}}};
    r.artifact.validate_roles();

    if (degree_profile(r.artifact.digraph).max_out > k)
        throw std::logic_error("coloring reduction: artifact exceeds out-degree k");
    return r;
}

Partition coloring_partition_from_coloring(const ColoringReduction& r, const std::vector<int>& g_coloring) {
    const int n = r.artifact.digraph.vertex_count();
    std::vector<int> part(n, -1);
    for (int i = 0; i < r.graph_order; ++i) {
        const int color = g_coloring.at(i);
        if (color < 0 || color >= r.p) throw std::invalid_argument("color out of range");
        for (int j = 0; j < r.graph_order; ++j) part[r.slot[i][j]] = color;
        for (const auto& link : r.link_tournament[i]) {
            int next = 0;
            for (int v : link) {
                if (next == color) ++next;
                part[v] = next++;
            }
        }
    }
    Partition p(r.p, std::move(part));
    if (check_max_reducing(r.artifact.digraph, p, r.k).has_value())
        throw std::invalid_argument("coloring is not proper for the input graph");
    return p;
}

std::vector<int> coloring_from_partition(const ColoringReduction& r, const Partition& p) {
    std::vector<int> coloring(r.graph_order);
    for (int i = 0; i < r.graph_order; ++i) coloring[i] = p.part_of[r.slot[i][0]];
    return coloring;
}

}  // namespace outpart
