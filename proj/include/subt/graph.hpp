#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subt/errors.hpp"
#include "subt/vertex_set.hpp"

namespace subt {

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is kept both as sorted neighbor lists (iteration) and as
/// per-vertex bitsets (membership tests and set algebra).
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph; duplicate edges collapse, self-loops and
    /// out-of-range endpoints are errors.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int n() const { return n_; }
    long m() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    const VertexSet& neighbor_set(int v) const { return nbr_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool adjacent(int u, int v) const {
        return u != v && nbr_[static_cast<size_t>(u)].contains(v);
    }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    /// All edges, sorted by (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const;

    /// Closed neighborhood N[v].
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = nbr_[static_cast<size_t>(v)];
        s.insert(v);
        return s;
    }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> nbr_;
};

/// Induced subgraph plus the relabel maps between new and original ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // new id -> original id, ascending
    std::vector<int> from_original;  // original id -> new id, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

/// Connected components of G[alive].
std::vector<VertexSet> connected_components_sub(const Graph& g, const VertexSet& alive);

/// A maximal 2-connected subgraph. Bridges appear as 2-vertex blocks, so
/// non_trivial is exactly "has at least 3 vertices".
struct Block {
    VertexSet vertices;
    int edge_count = 0;
    bool non_trivial = false;
    bool bipartite = true;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

/// Outcome of the 2-coloring test: either a valid coloring, or a closed
/// walk of odd length as the non-bipartiteness witness.
struct TwoColoring {
    bool bipartite = true;
    std::vector<int> color;     // 0/1 per vertex, valid iff bipartite
    std::vector<int> odd_walk;  // closed odd walk, nonempty iff !bipartite
};

TwoColoring is_bipartite(const Graph& g);

}  // namespace subt
