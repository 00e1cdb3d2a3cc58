#include <random>

#include "doctest.h"
#include "subt/generators.hpp"
#include "subt/oracle.hpp"
#include "subt/svc.hpp"
#include "subt/validity.hpp"
#include "test_util.hpp"

using namespace subt;

TEST_CASE("svc on cographs, fixed cases") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    Solution s = svc_p4free(star, VertexSet::of(4, {1, 2, 3}));
    CHECK(s.size() == 1);
    CHECK(s.vertices == VertexSet::of(4, {0}));
    CHECK(s.validated);

    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_cograph(6, seed);
        CHECK(svc_p4free(g, VertexSet(6)).vertices.empty());
    }

    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(svc_p4free(p4, VertexSet(4)), NotInClassError);
}

TEST_CASE("svc on cographs equals the oracle") {
    std::mt19937_64 rng(100);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = random_cograph(n, rng());
        VertexSet t = testutil::random_subset(n, 0.5, rng);
        Solution s = svc_p4free(g, t);
        CHECK(s.validated);
        CHECK(minimum_solution_bound_holds(t, s.vertices));
        Instance inst{g, t, Problem::SubsetVertexCover, std::nullopt};
        CHECK(s.size() == brute_force_minimum(inst).size());
    }
}

TEST_CASE("svc equals plain vertex cover after dropping non-terminal edges") {
    std::mt19937_64 rng(200);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = random_cograph(n, rng());
        VertexSet t = testutil::random_subset(n, 0.45, rng);
        std::vector<std::pair<int, int>> kept;
        for (auto [u, v] : g.edges()) {
            if (t.contains(u) || t.contains(v)) kept.emplace_back(u, v);
        }
        Graph filtered = Graph::from_edges(n, kept);
        Instance vc{filtered, filtered.vertex_set(), Problem::SubsetVertexCover, std::nullopt};
        CHECK(svc_p4free(g, t).size() == brute_force_minimum(vc).size());
    }
}

TEST_CASE("svc branching layer") {
    SvcInnerSolver exact = [](const Graph& g, const VertexSet& t) {
        Instance inst{g, t, Problem::SubsetVertexCover, std::nullopt};
        return brute_force_minimum(inst).vertices;
    };

    Graph any = Graph::from_edges(3, {{0, 1}});
    SvcBranchResult r = svc_extension_branch(any, VertexSet(3), exact);
    CHECK(r.solution.empty());
    CHECK(r.branch_vertex == -1);

    // isolated terminal: branching on it leaves nothing to cover
    Graph p1k2 = Graph::from_edges(3, {{1, 2}});
    r = svc_extension_branch(p1k2, VertexSet::of(3, {0}), exact);
    CHECK(r.solution.empty());

    // the winning branch keeps its vertex and takes the neighborhood
    std::mt19937_64 rng(300);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_graph(n, 0.45, rng);
        VertexSet t = testutil::random_subset(n, 0.6, rng);
        r = svc_extension_branch(g, t, exact);
        CHECK(verify_solution(Problem::SubsetVertexCover, g, t, r.solution));
        if (r.branch_vertex != -1) {
            CHECK_FALSE(r.solution.contains(r.branch_vertex));
            CHECK(g.neighbor_set(r.branch_vertex).is_subset_of(r.solution));
        }
    }
}

TEST_CASE("svc on (sP1+P4)-free graphs equals the oracle") {
    // C5 is (P1+P4)-free; its T-vertex cover for T = V is a plain vertex cover.
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Solution s = svc_sp1p4free(c5, c5.vertex_set(), 1);
    CHECK(s.size() == 3);

    // s = 0 collapses to the cotree rule
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(svc_sp1p4free(star, VertexSet::of(4, {1, 2, 3}), 0).size() == 1);

    std::mt19937_64 rng(400);
    for (int s_param = 1; s_param <= 2; ++s_param) {
        PatternGraph pattern = PatternGraph::sp1_plus_p4(s_param);
        for (int it = 0; it < 40; ++it) {
            int n = 4 + static_cast<int>(rng() % 9);
            Graph g = random_pattern_free(n, pattern, 0.55, rng());
            VertexSet t = testutil::random_subset(n, 0.5, rng);
            Solution sol = svc_sp1p4free(g, t, s_param);
            CHECK(sol.validated);
            CHECK(minimum_solution_bound_holds(t, sol.vertices));
            Instance inst{g, t, Problem::SubsetVertexCover, std::nullopt};
            CHECK(sol.size() == brute_force_minimum(inst).size());
        }
    }

    Graph p1p4 = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(svc_sp1p4free(p1p4, VertexSet(5), 1), NotInClassError);
}

TEST_CASE("svc dispatcher routes") {
    std::string route;
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    Instance inst{star, VertexSet::of(4, {1, 2, 3}), Problem::SubsetVertexCover, std::nullopt};
    Solution s = svc_solve(inst, 3, &route);
    CHECK(s.size() == 1);
    CHECK(route == "p4free");

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Instance c5_inst{c5, c5.vertex_set(), Problem::SubsetVertexCover, std::nullopt};
    s = svc_solve(c5_inst, 3, &route);
    CHECK(s.size() == 3);
    CHECK(route == "sp1p4free(s=1)");
}
