#include <random>
#include <variant>

#include "doctest.h"
#include "subt/cotree.hpp"
#include "subt/generators.hpp"
#include "subt/oracle.hpp"
#include "subt/patterns.hpp"
#include "subt/validity.hpp"
#include "test_util.hpp"

using namespace subt;

TEST_CASE("fixtures") {
    Instance house = fixture(FixtureName::house);
    CHECK(house.graph.n() == 5);
    CHECK(house.graph.m() == 6);
    CHECK(house.terminals.size() == 1);

    Instance pet = fixture(FixtureName::petersen);
    CHECK(pet.graph.n() == 10);
    CHECK(pet.graph.m() == 15);
    CHECK(pet.terminals.size() == 4);
    for (int v = 0; v < 10; ++v) CHECK(pet.graph.degree(v) == 3);

    Instance fig5 = fixture(FixtureName::fig5_p4);
    CHECK(fig5.graph.n() == 7);
    int deg2 = 0;
    for (int v = 4; v < 7; ++v) deg2 += (fig5.graph.degree(v) == 2) ? 1 : 0;
    CHECK(deg2 == 3);
    CHECK(fig5.terminals == VertexSet::of(7, {4, 5, 6}));

    CHECK_FALSE(parse_fixture("nope").has_value());
    CHECK(parse_fixture("house").has_value());
}

TEST_CASE("split reduction structure") {
    Graph k1 = Graph::from_edges(1, {});
    Instance r = reduce_vc_to_soct_split(k1);
    CHECK(r.graph.n() == 1);
    CHECK(r.terminals.empty());

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    r = reduce_vc_to_soct_split(p4);
    CHECK(r.graph.n() == 7);
    CHECK(classify(r.graph, 0).split);

    std::mt19937_64 rng(50);
    for (int it = 0; it < 25; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(n, 0.5, rng);
        Instance red = reduce_vc_to_soct_split(g);
        CHECK(classify(red.graph, 0).split);
    }
}

TEST_CASE("split reduction preserves the optimum") {
    std::mt19937_64 rng(60);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(n, 0.5, rng);
        if (g.n() + g.m() > 24) continue;
        Instance vc{g, g.vertex_set(), Problem::SubsetVertexCover, std::nullopt};
        Instance red = reduce_vc_to_soct_split(g);
        Solution vc_opt = brute_force_minimum(vc);
        Solution soct_opt = brute_force_minimum(red);
        CHECK(vc_opt.size() == soct_opt.size());

        // projecting edge-vertices to an endpoint yields a vertex cover of
        // the original graph without growing the set
        VertexSet projected(g.n());
        auto edges = g.edges();
        soct_opt.vertices.for_each([&](int v) {
            if (v < g.n()) {
                projected.insert(v);
            } else {
                projected.insert(edges[static_cast<size_t>(v - g.n())].first);
            }
        });
        CHECK(projected.size() <= soct_opt.size());
        CHECK(verify_solution(Problem::SubsetVertexCover, g, g.vertex_set(), projected));
    }
}

TEST_CASE("random cograph generator") {
    CHECK(random_cograph(1, 9).n() == 1);
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 14);
        Graph g = random_cograph(n, seed);
        CHECK(std::holds_alternative<Cotree>(build_modified_cotree(g)));
    }
    CHECK(random_cograph(9, 123).edges() == random_cograph(9, 123).edges());
}

TEST_CASE("random in-class generator") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_in_class(8, 0, 0.5, seed);
        for (const VertexSet& c : connected_components(g)) {
            auto sub = induced_subgraph(g, c).graph;
            CHECK(sub.m() == static_cast<long>(sub.n()) * (sub.n() - 1) / 2);
        }
    }

    Graph g1 = random_in_class(10, 1, 0.5, 7);
    Graph g2 = random_in_class(10, 1, 0.5, 7);
    CHECK(g1.edges() == g2.edges());
    CHECK_FALSE(find_induced(g1, PatternGraph::sp1_plus_p3(1)).has_value());

    // structured mode kicks in above the rejection-sampling threshold
    for (int s = 0; s <= 2; ++s) {
        Graph big = random_in_class(50, s, 0.5, 99);
        CHECK(big.n() == 50);
        CHECK_FALSE(find_induced(big, PatternGraph::sp1_plus_p3(s)).has_value());
    }

    // a dense draw is essentially never P3-free: the budget runs out
    CHECK_THROWS_AS(random_pattern_free(12, PatternGraph::sp1_plus_p3(0), 0.5, 1, 50),
                    GiveUpError);
}
