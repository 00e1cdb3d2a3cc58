#pragma once

#include <functional>

#include "subt/cotree.hpp"
#include "subt/graph.hpp"
#include "subt/instance.hpp"

namespace subt {

/// Minimum T-vertex cover of a cograph via the bottom-up cotree rule:
/// leaf -> {}, union -> S_y u S_z, join -> smallest of S_y u V(G_z),
/// S_z u V(G_y), T n V(G_x), first minimal winning ties.
/// Throws NotInClassError carrying a P4 witness.
Solution svc_p4free(const Graph& g, const VertexSet& t);

/// Per-node minimum T-vertex covers over an already built cotree; exposed so
/// the odd-cycle solver can reuse one tree for several terminal sets.
std::vector<VertexSet> svc_cotree_tables(const Graph& g, const Cotree& tree,
                                         const VertexSet& t);

using SvcInnerSolver = std::function<VertexSet(const Graph&, const VertexSet&)>;

struct SvcBranchResult {
    VertexSet solution;
    int branch_vertex = -1;  // -1 when the T fallback won
};

/// One layer of branching: for each u in T assume u stays uncovered, so
/// N(u) is taken and the inner solver finishes G - N[u]; the result is
/// compared against taking T outright.
SvcBranchResult svc_extension_branch(const Graph& g, const VertexSet& t,
                                     const SvcInnerSolver& inner);

/// s nested branch layers terminating in the cotree rule; the accepted
/// class is checked up front via find_induced.
Solution svc_sp1p4free(const Graph& g, const VertexSet& t, int s);

/// Route on class: p4free when possible, else the smallest s <= s_max with
/// the graph (sP1+P4)-free, else brute force for small n. Throws
/// NotInClassError when nothing applies.
Solution svc_solve(const Instance& inst, int s_max = 3, std::string* route_used = nullptr);

}  // namespace subt
