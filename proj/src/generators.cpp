#include "subt/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "subt/cotree.hpp"
#include "subt/errors.hpp"

namespace subt {

namespace {

int draw(std::mt19937_64& rng, int bound) {  // uniform-ish in [0, bound)
    return static_cast<int>(rng() % static_cast<uint64_t>(bound));
}

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Instance reduce_vc_to_soct_split(const Graph& g) {
    const int n = g.n();
    auto base_edges = g.edges();
    const int np = n + static_cast<int>(base_edges.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);  // clique on V
    }
    VertexSet terminals(np);
    for (size_t i = 0; i < base_edges.size(); ++i) {
        int ev = n + static_cast<int>(i);
        edges.emplace_back(ev, base_edges[i].first);
        edges.emplace_back(ev, base_edges[i].second);
        terminals.insert(ev);
    }
    return Instance{Graph::from_edges(np, edges), terminals,
                    Problem::SubsetOddCycleTransversal, std::nullopt};
}

namespace {

// Splits [lo, lo+len) into a random binary tree; emits join edges directly.
void random_cotree_rec(std::mt19937_64& rng, int lo, int len,
                       std::vector<std::pair<int, int>>& edges) {
    if (len == 1) return;
    int left_len = 1 + draw(rng, len - 1);
    bool join = (rng() & 1u) != 0;
    if (join) {
        for (int u = lo; u < lo + left_len; ++u) {
            for (int v = lo + left_len; v < lo + len; ++v) edges.emplace_back(u, v);
        }
    }
    random_cotree_rec(rng, lo, left_len, edges);
    random_cotree_rec(rng, lo + left_len, len - left_len, edges);
}

}  // namespace

Graph random_cograph(int n, uint64_t seed) {
    if (n < 1) throw Error("random_cograph: n must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    random_cotree_rec(rng, 0, n, edges);
    return Graph::from_edges(n, edges);
}

Graph random_pattern_free(int n, const PatternGraph& h, double p, uint64_t seed,
                          int budget) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng, p)) edges.emplace_back(u, v);
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (!find_induced(g, h).has_value()) return g;
    }
    throw GiveUpError("random_pattern_free: no " + h.name() + "-free draw in " +
                      std::to_string(budget) + " attempts (n=" + std::to_string(n) +
                      ", p=" + std::to_string(p) + ")");
}

Graph random_in_class(int n, int s, double p, uint64_t seed) {
    // s = 0 asks for a disjoint union of cliques; a G(n,p) draw is
    // essentially never one, so go straight to the structured source.
    if (s >= 1 && n <= 40) {
        return random_pattern_free(n, PatternGraph::sp1_plus_p3(s), p, seed);
    }
    // Structured fallback. For s = 0 any union of cliques works. For s >= 1:
    // one complete multipartite component plus at most s-1 clique
    // components. An induced P3 lives only in the multipartite part, no
    // vertex of that part is independent of it, and the cliques supply at
    // most s-1 further independent vertices, so no sP1+P3 fits.
    std::mt19937_64 rng(seed);
    const int comps = s == 0 ? 1 + draw(rng, n) : 1 + draw(rng, std::max(1, s));
    std::vector<int> sizes(static_cast<size_t>(comps), 1);
    for (int i = comps; i < n; ++i) ++sizes[static_cast<size_t>(draw(rng, comps))];
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int c = 0; c < comps; ++c) {
        int sz = sizes[static_cast<size_t>(c)];
        bool multipartite = (s >= 1 && c == 0);
        if (multipartite) {
            int parts = 1 + draw(rng, std::max(1, sz / 2));
            std::vector<int> part_of(static_cast<size_t>(sz));
            for (int i = 0; i < sz; ++i) part_of[static_cast<size_t>(i)] = draw(rng, parts);
            for (int i = 0; i < sz; ++i) {
                for (int j = i + 1; j < sz; ++j) {
                    if (part_of[static_cast<size_t>(i)] != part_of[static_cast<size_t>(j)]) {
                        edges.emplace_back(base + i, base + j);
                    }
                }
            }
        } else {
            for (int i = 0; i < sz; ++i)
                for (int j = i + 1; j < sz; ++j) edges.emplace_back(base + i, base + j);
        }
        base += sz;
    }
    Graph g = Graph::from_edges(n, edges);
    if (find_induced(g, PatternGraph::sp1_plus_p3(s)).has_value()) {
        throw GiveUpError("random_in_class: structured draw failed the class check");
    }
    return g;
}

std::optional<FixtureName> parse_fixture(const std::string& name) {
    if (name == "house") return FixtureName::house;
    if (name == "petersen") return FixtureName::petersen;
    if (name == "fig5_p4") return FixtureName::fig5_p4;
    return std::nullopt;
}

Instance fixture(FixtureName name) {
    switch (name) {
        case FixtureName::house: {
            // Triangle 0-1-2 on top of the 4-cycle 1-3-4-2; terminal 4.
            Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}});
            return Instance{std::move(g), VertexSet::of(5, {4}),
                            Problem::SubsetOddCycleTransversal, std::nullopt};
        }
        case FixtureName::petersen: {
            // Outer cycle 0..4, spokes i <-> i+5, inner pentagram 5..9.
            Graph g = Graph::from_edges(
                10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
            return Instance{std::move(g), VertexSet::of(10, {2, 3, 4, 5}),
                            Problem::SubsetOddCycleTransversal, std::nullopt};
        }
        case FixtureName::fig5_p4: {
            Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
            return reduce_vc_to_soct_split(p4);
        }
    }
    throw UnknownFixtureError("unknown fixture");
}

VertexSet petersen_black_left() { return VertexSet::of(10, {1, 3, 5}); }

VertexSet petersen_black_right() { return VertexSet::of(10, {2, 4, 5}); }

}  // namespace subt
