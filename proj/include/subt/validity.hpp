#pragma once

#include "subt/graph.hpp"
#include "subt/instance.hpp"
#include "subt/vertex_set.hpp"

namespace subt {

/// True iff no cycle of G (induced or not) passes through a vertex of T,
/// decided through the block decomposition: no non-trivial block may
/// contain a terminal.
bool is_t_forest(const Graph& g, const VertexSet& t);

/// True iff no odd cycle passes through a vertex of T: no non-bipartite
/// block may contain a terminal.
bool is_t_bipartite(const Graph& g, const VertexSet& t);

/// Same verdicts on G[alive] without materializing the subgraph; the hot
/// path for solvers and the oracle. Terminals outside `alive` are ignored.
bool is_t_forest_sub(const Graph& g, const VertexSet& alive, const VertexSet& t);
bool is_t_bipartite_sub(const Graph& g, const VertexSet& alive, const VertexSet& t);

/// Problem-specific solution check:
///   SVC  - every edge incident to a terminal has an endpoint in S.
///   SFVS - G-S is a (T\S)-forest.
///   SOCT - G-S is (T\S)-bipartite.
bool verify_solution(const Problem problem, const Graph& g, const VertexSet& t,
                     const VertexSet& s);
bool verify_solution(const Instance& inst, const VertexSet& s);

/// |S \ T| <= |T \ S|; holds for every minimum solution.
bool minimum_solution_bound_holds(const VertexSet& t, const VertexSet& s);

}  // namespace subt
