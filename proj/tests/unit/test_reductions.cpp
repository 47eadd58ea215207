#include <random>
#include <set>

#include "doctest.h"
#include "outpart/checkers.hpp"
#include "outpart/oracle.hpp"
#include "outpart/reductions.hpp"
#include "outpart/structure.hpp"
#include "support.hpp"

using namespace outpart;
namespace ts = testsupport;

namespace {

CnfFormula plain(int vars, std::vector<std::vector<int>> dimacs_clauses) {
    CnfFormula f;
    f.vars = vars;
    f.mode = CnfMode::plain3sat;
    for (const auto& c : dimacs_clauses) {
        Clause clause;
        for (int lit : c) clause.push_back(Literal{std::abs(lit) - 1, lit > 0});
        f.clauses.push_back(clause);
    }
    f.validate();
    return f;
}

CnfFormula monotone(int vars, std::vector<std::vector<int>> clauses) {
    CnfFormula f;
    f.vars = vars;
    f.mode = CnfMode::monotone_nae;
    for (const auto& c : clauses) {
        Clause clause;
        for (int v : c) clause.push_back(Literal{v, true});
        f.clauses.push_back(clause);
    }
    f.validate();
    return f;
}

/// All 56 single 3-literal clauses over three variables, as sorted multisets.
std::vector<Clause> all_3sat_clauses() {
    std::vector<Literal> literals;
    for (int var = 0; var < 3; ++var)
        for (bool sign : {true, false}) literals.push_back(Literal{var, sign});
    std::vector<Clause> result;
    for (size_t a = 0; a < literals.size(); ++a)
        for (size_t b = a; b < literals.size(); ++b)
            for (size_t c = b; c < literals.size(); ++c)
                result.push_back({literals[a], literals[b], literals[c]});
    return result;
}

}  // namespace

TEST_CASE("dimacs parsing") {
    const auto f = parse_dimacs("p cnf 1 1\n1 1 1 0\n", CnfMode::plain3sat);
    CHECK(f.vars == 1);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == Clause{{0, true}, {0, true}, {0, true}});

    const auto g = parse_dimacs("c comment\np cnf 3 1\n1 2 3 0\n", CnfMode::plain3sat);
    CHECK(g.clauses[0] == Clause{{0, true}, {1, true}, {2, true}});

    auto kind_of = [](const std::string& text, CnfMode mode) {
        try {
            parse_dimacs(text, mode);
        } catch (const parse_error& e) {
            return e.why;
        }
        FAIL("expected parse_error");
        return parse_error::kind::bad_header;
    };
    CHECK(kind_of("p cnf 1 1\n1 0\n", CnfMode::plain3sat) == parse_error::kind::bad_arity);
    CHECK(kind_of("p cnf 1 1\n1 2 1 0\n", CnfMode::plain3sat) == parse_error::kind::bad_literal);
    CHECK(kind_of("p dnf 1 1\n1 0\n", CnfMode::plain3sat) == parse_error::kind::bad_header);
    CHECK(kind_of("p cnf 2 1\n1 -2 1 0\n", CnfMode::monotone_nae) == parse_error::kind::bad_literal);
    CHECK(kind_of("p cnf 1 2\n1 1 1 0\n", CnfMode::plain3sat) == parse_error::kind::bad_header);
}

TEST_CASE("dimacs round-trip") {
    const auto f = plain(3, {{1, -2, 3}, {-1, 2, 2}});
    const auto back = parse_dimacs(serialize_dimacs(f), CnfMode::plain3sat);
    CHECK(back.clauses == f.clauses);
}

TEST_CASE("delta reduction: structural postconditions and forward translation") {
    const auto f = plain(1, {{1, 1, 1}});
    const auto r = reduce_sat_to_delta_partition(f, 1, 2);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(3));
    CHECK(is_strong(r.artifact.digraph));
    r.artifact.validate_roles();

    const auto p = delta_partition_from_assignment(r, {true});
    CHECK(!check_delta_bounded(r.artifact.digraph, p, 1, 2));
    CHECK(delta_assignment_from_partition(r, p) == std::vector<bool>{true});

    // x1 = false does not satisfy (x1 v x1 v x1)
    CHECK_THROWS_AS(delta_partition_from_assignment(r, {false}), std::invalid_argument);
}

TEST_CASE("delta reduction: satisfiable and unsatisfiable searches") {
    const auto sat = reduce_sat_to_delta_partition(plain(1, {{1, 1, 1}}), 1, 2);
    const auto found = pruned_delta_search(sat.artifact.digraph, 1, 2, {}, 50'000'000);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(delta_assignment_from_partition(sat, found.witness) == std::vector<bool>{true});

    const auto unsat = reduce_sat_to_delta_partition(plain(1, {{1, 1, 1}, {-1, -1, -1}}), 1, 2);
    CHECK(pruned_delta_search(unsat.artifact.digraph, 1, 2, {}, 50'000'000).status ==
          SearchStatus::none);
}

TEST_CASE("delta reduction at k1 = 0") {
    const auto f = plain(2, {{1, 2, 2}});
    const auto r = reduce_sat_to_delta_partition(f, 0, 2);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(3));
    CHECK(is_strong(r.artifact.digraph));
    const auto p = delta_partition_from_assignment(r, {true, false});
    CHECK(!check_delta_bounded(r.artifact.digraph, p, 0, 2));
    CHECK(pruned_delta_search(r.artifact.digraph, 0, 2, {}, 50'000'000).status == SearchStatus::found);
}

TEST_CASE("delta reduction equivalence sweep over two variables") {
    std::vector<Literal> lits;
    for (int v = 0; v < 2; ++v)
        for (bool s : {true, false}) lits.push_back({v, s});
    // all single clauses, both parameter pairs
    for (size_t a = 0; a < lits.size(); ++a)
        for (size_t b = a; b < lits.size(); ++b)
            for (size_t c = b; c < lits.size(); ++c) {
                CnfFormula f;
                f.vars = 2;
                f.mode = CnfMode::plain3sat;
                f.clauses = {{lits[a], lits[b], lits[c]}};
                const bool satisfiable = sat_brute_force(f).has_value();
                for (int k1 : {0, 1}) {
                    const auto r = reduce_sat_to_delta_partition(f, k1, 2);
                    const auto found =
                        pruned_delta_search(r.artifact.digraph, k1, 2, {}, 100'000'000);
                    REQUIRE(found.status != SearchStatus::budget_exceeded);
                    CHECK((found.status == SearchStatus::found) == satisfiable);
                    if (found.status == SearchStatus::found) {
                        const auto decoded = delta_assignment_from_partition(r, found.witness);
                        for (const auto& cl : f.clauses) CHECK(clause_satisfied(cl, decoded, f.mode));
                    }
                }
            }
    // unit-clause pairs, several of them contradictory
    for (size_t a = 0; a < lits.size(); ++a)
        for (size_t b = a; b < lits.size(); ++b) {
            CnfFormula f;
            f.vars = 2;
            f.mode = CnfMode::plain3sat;
            f.clauses = {{lits[a], lits[a], lits[a]}, {lits[b], lits[b], lits[b]}};
            const auto r = reduce_sat_to_delta_partition(f, 1, 2);
            const auto found = pruned_delta_search(r.artifact.digraph, 1, 2, {}, 100'000'000);
            REQUIRE(found.status != SearchStatus::budget_exceeded);
            CHECK((found.status == SearchStatus::found) == sat_brute_force(f).has_value());
        }
}

TEST_CASE("delta reduction rejects unsupported parameters") {
    CHECK_THROWS_AS(reduce_sat_to_delta_partition(plain(1, {{1, 1, 1}}), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(reduce_sat_to_delta_partition(plain(1, {{1, 1, 1}}), 1, 3), unsupported_error);
}

TEST_CASE("kernel reduction: base variant") {
    const auto f = plain(3, {{1, 2, 3}});
    const auto r = reduce_sat_to_kernel(f, false);
    CHECK(r.artifact.digraph.vertex_count() == 15);  // 9 + 2*3
    CHECK(degree_profile(r.artifact.digraph).max_out <= 2);
    r.artifact.validate_roles();

    const auto kernel = kernel_from_assignment(r, {true, false, false});
    CHECK(check_kernel(r.artifact.digraph, kernel).valid());
    CHECK(assignment_from_kernel(r, kernel) == std::vector<bool>{true, false, false});
}

TEST_CASE("kernel reduction: strong variant is strong and 2-out-regular") {
    const auto f = plain(3, {{1, 2, 3}});
    const auto r = reduce_sat_to_kernel(f, true);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(2));
    CHECK(is_strong(r.artifact.digraph));

    const auto kernel = kernel_from_assignment(r, {true, true, true});
    CHECK(check_kernel(r.artifact.digraph, kernel).valid());
}

TEST_CASE("kernel reduction: even clause counts are normalized") {
    const auto f = plain(2, {{1, 2, 2}, {-1, -2, -2}});
    const auto r = reduce_sat_to_kernel(f, true);
    CHECK(r.clause_count == 3);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(2));
    CHECK(is_strong(r.artifact.digraph));
}

TEST_CASE("kernel reduction agrees with SAT on every single-clause formula") {
    for (const auto& clause : all_3sat_clauses()) {
        CnfFormula f;
        f.vars = 3;
        f.mode = CnfMode::plain3sat;
        f.clauses = {clause};
        const auto model = sat_brute_force(f);
        REQUIRE(model.has_value());  // single 3-SAT clauses are satisfiable
        for (bool strong : {false, true}) {
            const auto r = reduce_sat_to_kernel(f, strong);
            const auto kernel = kernel_search(r.artifact.digraph);
            REQUIRE(kernel.has_value());
            CHECK(check_kernel(r.artifact.digraph, *kernel).valid());
            const auto decoded = assignment_from_kernel(r, *kernel);
            for (const auto& cl : f.clauses) CHECK(clause_satisfied(cl, decoded, f.mode));
            const auto direct = kernel_from_assignment(r, *model);
            CHECK(check_kernel(r.artifact.digraph, direct).valid());
        }
    }
}

TEST_CASE("kernel reduction: unsatisfiable formulas yield kernel-free artifacts") {
    // all eight sign patterns over three variables
    std::vector<std::vector<int>> clauses;
    for (int mask = 0; mask < 8; ++mask)
        clauses.push_back({mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3});
    const auto f = plain(3, clauses);
    CHECK(!sat_brute_force(f).has_value());
    for (bool strong : {false, true}) {
        const auto r = reduce_sat_to_kernel(f, strong);
        CHECK(!kernel_search(r.artifact.digraph).has_value());
    }
}

TEST_CASE("no kernel of a strong artifact contains the anchor's d vertex") {
    const auto f = plain(2, {{1, -2, 2}, {-1, 2, 1}, {1, 2, 2}});
    const auto r = reduce_sat_to_kernel(f, true);
    const auto kernels = enumerate_kernels(r.artifact.digraph, 500);
    CHECK(!kernels.empty());
    for (const auto& kernel : kernels)
        CHECK(std::find(kernel.begin(), kernel.end(), r.anchor[3]) == kernel.end());
}

TEST_CASE("NAE reduction: structure, translation, equivalence") {
    const auto f = monotone(4, {{0, 1, 2, 3}});
    const auto r = reduce_nae_to_kk_partition(f, 2);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(4));
    CHECK(is_strong(r.artifact.digraph));
    r.artifact.validate_roles();

    const auto p = nae_partition_from_assignment(r, {true, false, false, false});
    CHECK(!check_delta_bounded(r.artifact.digraph, p, 2, 2));
    CHECK_THROWS_AS(nae_partition_from_assignment(r, {true, true, true, true}),
                    std::invalid_argument);

    const auto found = pruned_delta_search(r.artifact.digraph, 2, 2, {}, 50'000'000);
    REQUIRE(found.status == SearchStatus::found);
    const auto decoded = nae_assignment_from_partition(r, found.witness);
    for (const auto& clause : f.clauses) CHECK(clause_satisfied(clause, decoded, CnfMode::monotone_nae));
}

TEST_CASE("NAE reduction with shared variables forces occurrence agreement") {
    const auto f = monotone(5, {{0, 1, 2, 3}, {0, 1, 2, 4}});
    REQUIRE(sat_brute_force(f).has_value());
    const auto r = reduce_nae_to_kk_partition(f, 2);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(4));
    CHECK(is_strong(r.artifact.digraph));

    const auto found = pruned_delta_search(r.artifact.digraph, 2, 2, {}, 100'000'000);
    REQUIRE(found.status == SearchStatus::found);
    for (int i = 0; i < 5; ++i)
        for (int occ : r.variable_occurrences[i])
            CHECK(found.witness.part_of[occ] == found.witness.part_of[r.variable_occurrences[i][0]]);
    const auto decoded = nae_assignment_from_partition(r, found.witness);
    for (const auto& clause : f.clauses) CHECK(clause_satisfied(clause, decoded, CnfMode::monotone_nae));
}

TEST_CASE("NAE reduction at k = 1 refutes the Fano instance") {
    // the seven lines of the Fano plane: no 2-coloring avoids a monochromatic line
    const auto fano = monotone(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    CHECK(!sat_brute_force(fano).has_value());
    const auto r = reduce_nae_to_kk_partition(fano, 1);
    CHECK(degree_profile(r.artifact.digraph).is_k_out_regular(3));
    CHECK(is_strong(r.artifact.digraph));
    CHECK(pruned_delta_search(r.artifact.digraph, 1, 1, {}, 200'000'000).status == SearchStatus::none);

    // dropping one line makes it NAE-satisfiable
    const auto six = monotone(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}});
    const auto model = sat_brute_force(six);
    REQUIRE(model.has_value());
    const auto r6 = reduce_nae_to_kk_partition(six, 1);
    const auto p = nae_partition_from_assignment(r6, *model);
    CHECK(!check_delta_bounded(r6.artifact.digraph, p, 1, 1));
    CHECK(pruned_delta_search(r6.artifact.digraph, 1, 1, {}, 200'000'000).status == SearchStatus::found);
}

TEST_CASE("NAE reduction input validation") {
    CHECK_THROWS_AS(reduce_nae_to_kk_partition(monotone(4, {{0, 1, 2, 2}}), 2), std::invalid_argument);
    CHECK_THROWS_AS(reduce_nae_to_kk_partition(monotone(3, {{0, 1, 2}}), 2), std::invalid_argument);
    CHECK_THROWS_AS(reduce_nae_to_kk_partition(monotone(5, {{0, 1, 2, 3, 4}}), 3), unsupported_error);
}

TEST_CASE("coloring reduction: small graphs") {
    const auto k3 = reduce_coloring_to_reducing_partition(ts::complete_graph(3), 2, 3);
    CHECK(degree_profile(k3.artifact.digraph).max_out <= 2);
    k3.artifact.validate_roles();
    CHECK(coloring_brute_force(underlying_graph(k3.artifact.digraph), 3, 10'000'000).status ==
          SearchStatus::found);

    const auto k4 = reduce_coloring_to_reducing_partition(ts::complete_graph(4), 2, 3);
    CHECK(coloring_brute_force(underlying_graph(k4.artifact.digraph), 3, 10'000'000).status ==
          SearchStatus::none);
}

TEST_CASE("coloring reduction: forward and backward translation on an edge") {
    Graph edge(2);
    edge.add_edge(0, 1);
    const auto r = reduce_coloring_to_reducing_partition(edge, 2, 3);
    const auto p = coloring_partition_from_coloring(r, {0, 1});
    CHECK(!check_max_reducing(r.artifact.digraph, p, 2));
    const auto back = coloring_from_partition(r, p);
    CHECK(back[0] != back[1]);

    // on this smallest artifact, cross-check against the raw partition oracle
    const auto direct = exhaustive_partition_search(r.artifact.digraph, prop_max_reducing{2}, 3,
                                                    100'000'000);
    CHECK(direct.status == SearchStatus::found);

    CHECK_THROWS_AS(coloring_partition_from_coloring(r, {0, 0}), std::invalid_argument);
}

TEST_CASE("coloring reduction parameter validation") {
    CHECK_THROWS_AS(reduce_coloring_to_reducing_partition(ts::complete_graph(3), 2, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_coloring_to_reducing_partition(ts::complete_graph(3), 1, 3),
                    std::invalid_argument);
}

TEST_CASE("coloring reduction equivalence on all graphs with three vertices") {
    for (unsigned mask = 0; mask < 8; ++mask) {
        Graph g(3);
        if (mask & 1) g.add_edge(0, 1);
        if (mask & 2) g.add_edge(0, 2);
        if (mask & 4) g.add_edge(1, 2);
        const auto r = reduce_coloring_to_reducing_partition(g, 2, 3);
        const auto direct = coloring_brute_force(g, 3, 1'000'000);
        const auto lifted = coloring_brute_force(underlying_graph(r.artifact.digraph), 3, 100'000'000);
        CHECK(direct.status == lifted.status);
        if (direct.status == SearchStatus::found) {
            const auto p = coloring_partition_from_coloring(r, direct.coloring);
            CHECK(!check_max_reducing(r.artifact.digraph, p, 2));
        }
    }
}
