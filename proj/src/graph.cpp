#include "subt/graph.hpp"

#include <algorithm>
#include <string>

namespace subt {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    g.nbr_.assign(static_cast<size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) {
            throw GraphError(GraphError::Kind::VertexOutOfRange, u,
                             "vertex " + std::to_string(u) + " out of range [0," +
                                 std::to_string(n) + ")");
        }
        if (v < 0 || v >= n) {
            throw GraphError(GraphError::Kind::VertexOutOfRange, v,
                             "vertex " + std::to_string(v) + " out of range [0," +
                                 std::to_string(n) + ")");
        }
        if (u == v) {
            throw GraphError(GraphError::Kind::SelfLoop, u,
                             "self-loop at vertex " + std::to_string(u));
        }
        if (g.nbr_[static_cast<size_t>(u)].contains(v)) continue;  // duplicate
        g.nbr_[static_cast<size_t>(u)].insert(v);
        g.nbr_[static_cast<size_t>(v)].insert(u);
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
        ++g.m_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[static_cast<size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_original = s.to_vector();
    out.from_original.assign(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < out.to_original.size(); ++i) {
        out.from_original[static_cast<size_t>(out.to_original[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < out.to_original.size(); ++i) {
        int u = out.to_original[i];
        for (int v : g.neighbors(u)) {
            if (u < v && s.contains(v)) {
                edges.emplace_back(static_cast<int>(i),
                                   out.from_original[static_cast<size_t>(v)]);
            }
        }
    }
    out.graph = Graph::from_edges(static_cast<int>(out.to_original.size()), edges);
    return out;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.n(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components_sub(g, g.vertex_set());
}

std::vector<VertexSet> connected_components_sub(const Graph& g, const VertexSet& alive) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.n());
    std::vector<int> stack;
    alive.for_each([&](int start) {
        if (seen.contains(start)) return;
        VertexSet comp(g.n());
        stack.push_back(start);
        seen.insert(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (int v : g.neighbors(u)) {
                if (alive.contains(v) && !seen.contains(v)) {
                    seen.insert(v);
                    stack.push_back(v);
                }
            }
        }
        comps.push_back(std::move(comp));
    });
    return comps;
}

namespace {

// 2-colors the subgraph spanned by the given edge list; true iff bipartite.
bool color_block(int n, const std::vector<std::pair<int, int>>& block_edges,
                 std::vector<int>& color_scratch) {
    if (block_edges.empty()) return true;
    color_scratch.assign(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> adj;  // local adjacency over touched vertices
    std::vector<int> touched;
    adj.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : block_edges) {
        if (adj[static_cast<size_t>(u)].empty()) touched.push_back(u);
        if (adj[static_cast<size_t>(v)].empty()) touched.push_back(v);
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<int> queue;
    for (int s : touched) {
        if (color_scratch[static_cast<size_t>(s)] != -1) continue;
        color_scratch[static_cast<size_t>(s)] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (color_scratch[static_cast<size_t>(v)] == -1) {
                    color_scratch[static_cast<size_t>(v)] =
                        1 - color_scratch[static_cast<size_t>(u)];
                    queue.push_back(v);
                } else if (color_scratch[static_cast<size_t>(v)] ==
                           color_scratch[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.n();
    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);

    std::vector<int> disc(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<int> color_scratch;
    int timer = 0;

    // Iterative DFS frame: vertex plus position in its adjacency list.
    struct Frame {
        int v;
        size_t next;
        int child_count;
    };
    std::vector<Frame> frames;

    auto pop_block = [&](int u, int v) {
        Block b;
        b.vertices = VertexSet(n);
        std::vector<std::pair<int, int>> block_edges;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block_edges.push_back(e);
            b.vertices.insert(e.first);
            b.vertices.insert(e.second);
            if (e.first == u && e.second == v) break;
        }
        b.edge_count = static_cast<int>(block_edges.size());
        b.non_trivial = b.vertices.size() >= 3;
        b.bipartite = color_block(n, block_edges, color_scratch);
        out.blocks.push_back(std::move(b));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        frames.push_back({root, 0, 0});
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        while (!frames.empty()) {
            int u = frames.back().v;
            if (frames.back().next < g.neighbors(u).size()) {
                int v = g.neighbors(u)[frames.back().next++];
                if (v == parent[static_cast<size_t>(u)]) continue;
                if (disc[static_cast<size_t>(v)] == -1) {
                    parent[static_cast<size_t>(v)] = u;
                    edge_stack.emplace_back(u, v);
                    disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
                    ++frames.back().child_count;
                    frames.push_back({v, 0, 0});
                } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
                    edge_stack.emplace_back(u, v);
                    low[static_cast<size_t>(u)] =
                        std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
                }
            } else {
                frames.pop_back();
                if (frames.empty()) break;
                int p = frames.back().v;
                low[static_cast<size_t>(p)] =
                    std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
                if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)]) {
                    // p separates the subtree at u: close off one block. The
                    // root is a cut vertex only once a second child finishes.
                    if (parent[static_cast<size_t>(p)] != -1 ||
                        frames.back().child_count >= 2) {
                        out.cut_vertices.insert(p);
                    }
                    pop_block(p, u);
                }
            }
        }
    }
    return out;
}

TwoColoring is_bipartite(const Graph& g) {
    TwoColoring out;
    const int n = g.n();
    out.color.assign(static_cast<size_t>(n), -1);
    std::vector<int> par(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (out.color[static_cast<size_t>(root)] != -1) continue;
        out.color[static_cast<size_t>(root)] = 0;
        queue.assign(1, root);
        size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int v : g.neighbors(u)) {
                if (out.color[static_cast<size_t>(v)] == -1) {
                    out.color[static_cast<size_t>(v)] = 1 - out.color[static_cast<size_t>(u)];
                    par[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                } else if (out.color[static_cast<size_t>(v)] ==
                           out.color[static_cast<size_t>(u)]) {
                    // Same-color edge closes an odd walk through the BFS
                    // tree: root..u, edge uv, v..root. Stored cyclically
                    // (last vertex wraps to the first), so the vertex count
                    // equals the odd edge count.
                    std::vector<int> up, vp;
                    for (int x = u; x != -1; x = par[static_cast<size_t>(x)]) up.push_back(x);
                    for (int x = v; x != -1; x = par[static_cast<size_t>(x)]) vp.push_back(x);
                    out.bipartite = false;
                    out.odd_walk.assign(up.rbegin(), up.rend());
                    out.odd_walk.insert(out.odd_walk.end(), vp.begin(), vp.end());
                    out.odd_walk.pop_back();
                    out.color.clear();
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace subt
