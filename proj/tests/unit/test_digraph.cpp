#include <random>

#include "doctest.h"
#include "outpart/digraph.hpp"
#include "support.hpp"

using namespace outpart;
namespace ts = testsupport;

TEST_CASE("parse_digraph accepts the smallest digon") {
    const auto d = parse_digraph("2 2\n0 1\n1 0\n");
    CHECK(d.vertex_count() == 2);
    CHECK(d.arc_count() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
}

TEST_CASE("parse_digraph accepts the directed triangle") {
    const auto d = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(d == ts::directed_cycle(3));
}

TEST_CASE("parse_digraph rejects bad input with distinct error kinds") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_digraph(text);
        } catch (const parse_error& e) {
            return e.why;
        }
        FAIL("expected parse_error");
        return parse_error::kind::bad_header;
    };
    CHECK(kind_of("1 1\n0 0\n") == parse_error::kind::self_loop);
    CHECK(kind_of("2 2\n0 1\n0 1\n") == parse_error::kind::duplicate_arc);
    CHECK(kind_of("2 1\n0 5\n") == parse_error::kind::out_of_range);
    CHECK(kind_of("2 1\nx y\n") == parse_error::kind::malformed_line);
    CHECK(kind_of("2 1\n0 1 2\n") == parse_error::kind::malformed_line);
    CHECK(kind_of("banana\n") == parse_error::kind::bad_header);
    CHECK(kind_of("2 3\n0 1\n") == parse_error::kind::malformed_line);
}

TEST_CASE("serialization is exact and round-trips") {
    const auto digon = parse_digraph("2 2\n0 1\n1 0\n");
    CHECK(serialize_digraph(digon) == "2 2\n0 1\n1 0\n");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + rng() % 8;
        const auto d = ts::random_digraph(rng, n, 20 + rng() % 50);
        CHECK(parse_digraph(serialize_digraph(d)) == d);
    }
}

TEST_CASE("underlying graph collapses digons and keeps arcs") {
    CHECK(underlying_graph(parse_digraph("2 2\n0 1\n1 0\n")).edge_count() == 1);

    const auto k3 = underlying_graph(ts::directed_cycle(3));
    CHECK(k3.edge_count() == 3);

    const auto mixed = underlying_graph(ts::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}}));
    CHECK(mixed.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("underlying graph ignores orientation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = ts::random_digraph(rng, 1 + rng() % 7, 40);
        CHECK(underlying_graph(d) == underlying_graph(reverse(d)));
    }
}

TEST_CASE("degree profile") {
    const auto c3 = degree_profile(ts::directed_cycle(3));
    CHECK(c3.max_out == 1);
    CHECK(c3.is_k_out_regular(1));

    const auto qr5 = degree_profile(ts::qr5());
    CHECK(qr5.max_out == 2);
    CHECK(qr5.max_in == 2);
    CHECK(qr5.is_k_out_regular(2));
    for (int v = 0; v < 5; ++v) {
        CHECK(qr5.out_degree[v] == 2);
        CHECK(qr5.in_degree[v] == 2);
    }

    const auto arc = degree_profile(ts::from_arcs(2, {{0, 1}}));
    CHECK(arc.max_out == 1);
    CHECK(!arc.out_regular);
}

TEST_CASE("degree sums equal the arc count") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = ts::random_digraph(rng, 1 + rng() % 8, 35);
        const auto p = degree_profile(d);
        int out_sum = 0, in_sum = 0;
        for (int v = 0; v < d.vertex_count(); ++v) {
            out_sum += p.out_degree[v];
            in_sum += p.in_degree[v];
        }
        CHECK(out_sum == d.arc_count());
        CHECK(in_sum == d.arc_count());
    }
}

TEST_CASE("dot export") {
    const auto dot = to_dot(ts::from_arcs(2, {{0, 1}}));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 -> 1;") != std::string::npos);
}

TEST_CASE("partition text format") {
    const auto p = parse_partition("0 0\n1 1\n2 0\n3 1\n");
    CHECK(p.parts == 2);
    CHECK(p.part_of == std::vector<int>{0, 1, 0, 1});
    CHECK(serialize_partition(p) == "0 0\n1 1\n2 0\n3 1\n");

    const auto wide = parse_partition("0 0\n1 0\n", 5);
    CHECK(wide.parts == 5);

    CHECK_THROWS_AS(parse_partition("0 0\n0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_partition("0 0\n5 1\n"), parse_error);
    CHECK_THROWS_AS(parse_partition("0 3\n", 2), parse_error);
}

TEST_CASE("vertex set text format") {
    CHECK(parse_vertex_set("2 0 1\n") == std::vector<int>{0, 1, 2});
    CHECK(serialize_vertex_set({0, 2}) == "0 2\n");
    CHECK_THROWS_AS(parse_vertex_set("1 1\n"), parse_error);
}
