#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subt/graph.hpp"
#include "subt/instance.hpp"
#include "subt/patterns.hpp"

namespace subt {

/// Split-graph construction: V(G') = V u E, V made a clique, each
/// edge-vertex adjacent to its two endpoints, terminals = the edge vertices.
/// Edge vertices take ids n..n+m-1 in sorted edge order.
Instance reduce_vc_to_soct_split(const Graph& g);

/// Random full binary cotree with n leaves, labels drawn uniformly; the
/// realized graph is a cograph by construction. All generators use
/// mt19937_64 seeded directly with `seed`, draws mapped by modulo.
Graph random_cograph(int n, uint64_t seed);

/// G(n,p) rejection sampling until the draw is H-free; GiveUp after
/// `budget` rejected draws.
Graph random_pattern_free(int n, const PatternGraph& h, double p, uint64_t seed,
                          int budget = 10000);

/// (sP1+P3)-free instance source: rejection sampling for n <= 40, a
/// structured union of at most max(s,1) complete multipartite graphs above
/// that (always in class; re-verified before returning).
Graph random_in_class(int n, int s, double p, uint64_t seed);

enum class FixtureName { house, petersen, fig5_p4 };

std::optional<FixtureName> parse_fixture(const std::string& name);

/// Fixed instances transcribed from their drawings; terminals as drawn.
Instance fixture(FixtureName name);

/// The two marked solutions that accompany the petersen fixture.
VertexSet petersen_black_left();
VertexSet petersen_black_right();

}  // namespace subt
