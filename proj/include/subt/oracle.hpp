#pragma once

#include "subt/graph.hpp"
#include "subt/instance.hpp"
#include "subt/vertex_set.hpp"

namespace subt {

/// Exponential-time ground truth: the minimum solution found by enumerating
/// candidate sets in order of increasing size, pruned by |S\T| <= |T\S|
/// (lossless, since every minimum solution satisfies it). Ties break to the
/// lexicographically smallest set. Guarded at n <= 24.
Solution brute_force_minimum(const Instance& inst);

/// Verdicts by enumerating all simple cycles via DFS path extension;
/// cross-checks for the block-based tests. Guarded at n <= 12.
bool naive_is_t_forest(const Graph& g, const VertexSet& t);
bool naive_is_t_bipartite(const Graph& g, const VertexSet& t);

}  // namespace subt
