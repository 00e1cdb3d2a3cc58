#include <random>
#include <sstream>

#include "doctest.h"
#include "subt/generators.hpp"
#include "subt/graph.hpp"
#include "subt/io.hpp"
#include "test_util.hpp"

using namespace subt;

TEST_CASE("graph construction") {
    Graph empty = Graph::from_edges(0, {});
    CHECK(empty.n() == 0);
    CHECK(empty.m() == 0);

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.m() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), GraphError);

    Graph dup = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.m() == 1);
}

TEST_CASE("induced subgraph") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto k2 = induced_subgraph(p4, VertexSet::of(4, {0, 1}));
    CHECK(k2.graph.n() == 2);
    CHECK(k2.graph.m() == 1);

    auto p1p1 = induced_subgraph(p4, VertexSet::of(4, {0, 3}));
    CHECK(p1p1.graph.m() == 0);

    // house minus the apex is the 4-cycle
    Instance house = fixture(FixtureName::house);
    VertexSet keep = house.graph.vertex_set();
    keep.erase(0);
    auto c4 = induced_subgraph(house.graph, keep);
    CHECK(c4.graph.n() == 4);
    CHECK(c4.graph.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.graph.degree(v) == 2);

    // identity relabel when inducing on everything
    auto same = induced_subgraph(p4, p4.vertex_set());
    CHECK(same.graph.edges() == p4.edges());
}

TEST_CASE("complement") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(complement(k3).m() == 0);

    Graph twop2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Graph co = complement(twop2);
    CHECK(co.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(co.degree(v) == 2);  // C4

    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Graph g = testutil::random_graph(2 + static_cast<int>(rng() % 11), 0.4, rng);
        CHECK(complement(complement(g)).edges() == g.edges());
    }
}

TEST_CASE("connected components") {
    Graph threep1 = Graph::from_edges(3, {});
    CHECK(connected_components(threep1).size() == 3);

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto comps = connected_components(p4);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 4);

    Graph twop2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    comps = connected_components(twop2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 2);
    CHECK(comps[1].size() == 2);
}

TEST_CASE("block decomposition fixtures") {
    Instance house = fixture(FixtureName::house);
    auto bd = block_decomposition(house.graph);
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].vertices.size() == 5);
    CHECK(bd.blocks[0].non_trivial);
    CHECK_FALSE(bd.blocks[0].bipartite);
    CHECK(bd.cut_vertices.empty());

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    bd = block_decomposition(p4);
    CHECK(bd.blocks.size() == 3);
    for (const Block& b : bd.blocks) {
        CHECK(b.vertices.size() == 2);
        CHECK_FALSE(b.non_trivial);
    }
    CHECK(bd.cut_vertices == VertexSet::of(4, {1, 2}));

    Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    bd = block_decomposition(bowtie);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0].vertices.size() == 3);
    CHECK(bd.blocks[1].vertices.size() == 3);
    CHECK(bd.cut_vertices == VertexSet::of(5, {2}));
}

TEST_CASE("block decomposition properties") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = testutil::random_graph(n, 0.3, rng);
        auto bd = block_decomposition(g);

        long edge_sum = 0;
        for (const Block& b : bd.blocks) {
            edge_sum += b.edge_count;
            CHECK(b.non_trivial == (b.vertices.size() >= 3));
        }
        CHECK(edge_sum == g.m());

        // every edge lies in exactly one block
        for (auto [u, v] : g.edges()) {
            int hits = 0;
            for (const Block& b : bd.blocks) {
                if (b.vertices.contains(u) && b.vertices.contains(v)) ++hits;
            }
            CHECK(hits == 1);
        }

        // cut vertex iff in >= 2 blocks
        for (int v = 0; v < n; ++v) {
            int in_blocks = 0;
            for (const Block& b : bd.blocks) in_blocks += b.vertices.contains(v) ? 1 : 0;
            CHECK(bd.cut_vertices.contains(v) == (in_blocks >= 2));
        }
    }
}

TEST_CASE("two coloring") {
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(is_bipartite(c4).bipartite);

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto res = is_bipartite(c5);
    CHECK_FALSE(res.bipartite);
    CHECK(res.odd_walk.size() % 2 == 1);  // odd closed walk: odd vertex count

    CHECK_FALSE(is_bipartite(fixture(FixtureName::petersen).graph).bipartite);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_graph(n, 0.35, rng);
        auto r = is_bipartite(g);
        if (r.bipartite) {
            for (auto [u, v] : g.edges()) {
                CHECK(r.color[static_cast<size_t>(u)] != r.color[static_cast<size_t>(v)]);
            }
        } else {
            // closed odd walk along real edges
            REQUIRE(r.odd_walk.size() >= 3);
            size_t len = r.odd_walk.size();
            for (size_t i = 0; i < len; ++i) {
                CHECK(g.adjacent(r.odd_walk[i], r.odd_walk[(i + 1) % len]));
            }
            CHECK(len % 2 == 1);
        }
    }
}

TEST_CASE("instance text format") {
    std::string text =
        "c a comment\n"
        "p 4 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 3 4\n"
        "t 2\n"
        "t 4\n";
    std::istringstream in(text);
    TextInstance ti = read_instance(in);
    CHECK(ti.graph.n() == 4);
    CHECK(ti.graph.m() == 3);
    CHECK(ti.terminals == VertexSet::of(4, {1, 3}));

    std::ostringstream out;
    write_instance(out, ti.graph, ti.terminals);
    std::istringstream round(out.str());
    TextInstance ti2 = read_instance(round);
    CHECK(ti2.graph.edges() == ti.graph.edges());
    CHECK(ti2.terminals == ti.terminals);
}

TEST_CASE("instance parse errors") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_instance(in);
            FAIL_CHECK("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("p 2 1\ne 1 1\n", 2);          // self-loop
    expect_error("p 2 1\ne 1 5\n", 2);          // out of range
    expect_error("e 1 2\np 3 1\n", 1);          // edge before p
    expect_error("p 2 2\ne 1 2\n", 2);          // wrong edge count
    expect_error("p 2 0\nq 1\n", 2);            // unknown tag
}

TEST_CASE("solution file round-trip") {
    VertexSet s = VertexSet::of(6, {0, 2, 5});
    std::ostringstream out;
    write_solution(out, s);
    std::istringstream in(out.str());
    CHECK(read_solution(in, 6) == s);
}

TEST_CASE("vertex set basics") {
    VertexSet a = VertexSet::of(70, {3, 64, 69});
    CHECK(a.size() == 3);
    CHECK(a.contains(64));
    CHECK(a.min() == 3);
    a.erase(3);
    CHECK(a.min() == 64);

    VertexSet b = VertexSet::of(70, {64});
    CHECK(b.is_subset_of(a));
    CHECK((a - b) == VertexSet::of(70, {69}));

    CHECK(VertexSet::of(8, {0, 5}).lex_less(VertexSet::of(8, {1, 2})));
    CHECK(VertexSet::of(8, {1}).lex_less(VertexSet::of(8, {1, 2})));
    CHECK_FALSE(VertexSet::of(8, {1, 2}).lex_less(VertexSet::of(8, {1})));
}
