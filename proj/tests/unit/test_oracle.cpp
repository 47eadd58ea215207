#include <random>

#include "doctest.h"
#include "outpart/oracle.hpp"
#include "support.hpp"

using namespace outpart;
namespace ts = testsupport;

TEST_CASE("exhaustive partition search: triangle has no 1-all-reducing 2-partition") {
    const auto result = exhaustive_partition_search(ts::directed_cycle(3), prop_all_reducing{1}, 2, 1000);
    CHECK(result.status == SearchStatus::none);
}

TEST_CASE("exhaustive partition search: C4 yields the lexicographically least witness") {
    const auto result = exhaustive_partition_search(ts::directed_cycle(4), prop_all_reducing{1}, 2, 1000);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(result.witness.part_of == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("exhaustive partition search: QR5 has no 2-all-reducing 4-partition") {
    const auto result = exhaustive_partition_search(ts::qr5(), prop_all_reducing{2}, 4, 2000);
    CHECK(result.status == SearchStatus::none);
}

TEST_CASE("budget exhaustion is a distinct outcome") {
    const auto result = exhaustive_partition_search(ts::directed_cycle(3), prop_all_reducing{1}, 2, 2);
    CHECK(result.status == SearchStatus::budget_exceeded);
}

TEST_CASE("parallel search returns the same witness") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const auto d = ts::random_digraph(rng, 2 + rng() % 5, 30 + rng() % 40);
        const auto p = prop_delta_bounded{static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2)};
        const auto seq = exhaustive_partition_search(d, p, 2, 100000, 1);
        const auto par = exhaustive_partition_search(d, p, 2, 100000, 4);
        CHECK(seq.status == par.status);
        if (seq.status == SearchStatus::found) CHECK(seq.witness.part_of == par.witness.part_of);
    }
}

TEST_CASE("kernel search basics") {
    CHECK(kernel_search(ts::from_arcs(2, {{0, 1}, {1, 0}})) == std::vector<int>{0});
    CHECK(!kernel_search(ts::directed_cycle(3)).has_value());
    CHECK(kernel_search(ts::directed_cycle(4)) == std::vector<int>{0, 2});
}

TEST_CASE("kernel search agrees with subset enumeration and is lex-least") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < ts::digraph_mask_limit(n); ++mask) {
            const auto d = ts::digraph_from_mask(n, mask);
            std::vector<int> best;
            bool any = false;
            for (unsigned subset = 0; subset < (1u << n); ++subset) {
                std::vector<int> candidate;
                for (int v = 0; v < n; ++v)
                    if (subset >> v & 1) candidate.push_back(v);
                if (!check_kernel(d, candidate).valid()) continue;
                if (!any || candidate < best) {
                    best = candidate;
                    any = true;
                }
            }
            const auto found = kernel_search(d);
            CHECK(found.has_value() == any);
            if (any) CHECK(*found == best);
        }
}

TEST_CASE("kernel enumeration lists every kernel") {
    const auto c4 = ts::directed_cycle(4);
    const auto kernels = enumerate_kernels(c4, 100);
    CHECK(kernels == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("sat brute force") {
    CnfFormula f;
    f.vars = 1;
    f.mode = CnfMode::plain3sat;
    f.clauses = {{{0, true}, {0, true}, {0, true}}};
    const auto model = sat_brute_force(f);
    REQUIRE(model.has_value());
    CHECK((*model)[0] == true);

    CnfFormula unsat;
    unsat.vars = 1;
    unsat.mode = CnfMode::plain3sat;
    unsat.clauses = {{{0, true}, {0, true}, {0, true}}, {{0, false}, {0, false}, {0, false}}};
    CHECK(!sat_brute_force(unsat).has_value());
}

TEST_CASE("NAE brute force needs a true and a false literal per clause") {
    CnfFormula f;
    f.vars = 3;
    f.mode = CnfMode::monotone_nae;
    f.clauses = {{{0, true}, {1, true}, {2, true}}};
    const auto model = sat_brute_force(f);
    REQUIRE(model.has_value());
    CHECK((*model) == std::vector<bool>{true, false, false});

    CnfFormula forced;
    forced.vars = 1;
    forced.mode = CnfMode::monotone_nae;
    forced.clauses = {{{0, true}, {0, true}, {0, true}}};
    CHECK(!sat_brute_force(forced).has_value());
}

TEST_CASE("coloring brute force") {
    CHECK(coloring_brute_force(ts::complete_graph(3), 3, 100000).status == SearchStatus::found);
    CHECK(coloring_brute_force(ts::complete_graph(4), 3, 100000).status == SearchStatus::none);
    Graph c5(5);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CHECK(coloring_brute_force(c5, 2, 100000).status == SearchStatus::none);
}

TEST_CASE("oracle determinism") {
    const auto d = ts::qr5();
    const auto a = exhaustive_partition_search(d, prop_all_reducing{2}, 5, 100000);
    const auto b = exhaustive_partition_search(d, prop_all_reducing{2}, 5, 100000);
    REQUIRE(a.status == SearchStatus::found);
    CHECK(a.witness.part_of == b.witness.part_of);
}

TEST_CASE("delta(0,1) existence matches kernel existence on 2-out-regular digraphs") {
    for (int n = 3; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < ts::digraph_mask_limit(n); ++mask) {
            const auto d = ts::digraph_from_mask(n, mask);
            if (!degree_profile(d).is_k_out_regular(2)) continue;
            const auto part = exhaustive_partition_search(d, prop_delta_bounded{0, 1}, 2, 100000);
            CHECK((part.status == SearchStatus::found) == kernel_search(d).has_value());
        }
}

TEST_CASE("pruned delta search agrees with the raw enumerator") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 1 + rng() % 7;
        const auto d = ts::random_digraph(rng, n, 15 + rng() % 70);
        const int k1 = rng() % 3, k2 = rng() % 3;
        const auto raw = exhaustive_partition_search(d, prop_delta_bounded{k1, k2}, 2, 1'000'000);
        const auto pruned = pruned_delta_search(d, k1, k2, {}, 1'000'000);
        CHECK(raw.status == pruned.status);
        if (pruned.status == SearchStatus::found)
            CHECK(!check_delta_bounded(d, pruned.witness, k1, k2));
    }
}

TEST_CASE("search witnesses are the lexicographically least valid assignments") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + rng() % 5;
        const int parts = 2 + rng() % 2;
        const int k = 1 + rng() % 2;
        const auto d = ts::random_digraph(rng, n, 20 + rng() % 60);
        std::optional<Partition> reference;
        ts::for_each_partition(n, parts, [&](const Partition& p) {
            if (reference) return;
            if (!check_all_reducing(d, p, k)) reference = p;
        });
        const auto found = exhaustive_partition_search(d, prop_all_reducing{k}, parts, 5'000'000);
        CHECK((found.status == SearchStatus::found) == reference.has_value());
        if (reference) CHECK(found.witness.part_of == reference->part_of);
    }
}

TEST_CASE("pruned delta search honors assumptions") {
    const auto c4 = ts::directed_cycle(4);
    const auto pinned = pruned_delta_search(c4, 0, 0, {{0, 1}}, 100000);
    REQUIRE(pinned.status == SearchStatus::found);
    CHECK(pinned.witness.part_of == std::vector<int>{1, 0, 1, 0});
    // C3 is not bipartite: no (0,0)-partition under any assumption
    CHECK(pruned_delta_search(ts::directed_cycle(3), 0, 0, {}, 100000).status == SearchStatus::none);
}
