#include "subt/validity.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace subt {

namespace {

enum class Mode { TForest, TBipartite };

// Parity union-find over one block's edges, reset lazily via epochs; detects
// an odd cycle without building per-block adjacency.
struct Scratch {
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> frames;

    std::vector<int> uf_parent;
    std::vector<int> uf_rank;
    std::vector<uint8_t> uf_parity;  // parity of vertex relative to its parent
    std::vector<int> uf_epoch;
    int epoch = 0;

    void prepare(int n) {
        disc.assign(static_cast<size_t>(n), -1);
        low.assign(static_cast<size_t>(n), 0);
        parent.assign(static_cast<size_t>(n), -1);
        edge_stack.clear();
        frames.clear();
        if (static_cast<int>(uf_parent.size()) < n) {
            uf_parent.resize(static_cast<size_t>(n));
            uf_rank.resize(static_cast<size_t>(n));
            uf_parity.resize(static_cast<size_t>(n));
            uf_epoch.resize(static_cast<size_t>(n), -1);
        }
    }

    std::pair<int, int> find(int v) {
        if (uf_epoch[static_cast<size_t>(v)] != epoch) {
            uf_epoch[static_cast<size_t>(v)] = epoch;
            uf_parent[static_cast<size_t>(v)] = v;
            uf_rank[static_cast<size_t>(v)] = 0;
            uf_parity[static_cast<size_t>(v)] = 0;
            return {v, 0};
        }
        int root = v, par = 0;
        while (uf_parent[static_cast<size_t>(root)] != root) {
            par ^= uf_parity[static_cast<size_t>(root)];
            root = uf_parent[static_cast<size_t>(root)];
        }
        // Path compression, re-anchoring parities at the root. Walking from
        // v, px is parity(v -> x), so parity(x -> root) = px ^ par.
        int x = v, px = 0;
        while (uf_parent[static_cast<size_t>(x)] != root) {
            int nxt = uf_parent[static_cast<size_t>(x)];
            int pnxt = px ^ uf_parity[static_cast<size_t>(x)];
            uf_parent[static_cast<size_t>(x)] = root;
            uf_parity[static_cast<size_t>(x)] = static_cast<uint8_t>(px ^ par);
            x = nxt;
            px = pnxt;
        }
        return {root, par};
    }

    // False iff adding edge (u,v) closes an odd cycle.
    bool join(int u, int v) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return pu != pv;
        if (uf_rank[static_cast<size_t>(ru)] < uf_rank[static_cast<size_t>(rv)]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        uf_parent[static_cast<size_t>(rv)] = ru;
        uf_parity[static_cast<size_t>(rv)] = static_cast<uint8_t>(pu ^ pv ^ 1);
        if (uf_rank[static_cast<size_t>(ru)] == uf_rank[static_cast<size_t>(rv)]) {
            ++uf_rank[static_cast<size_t>(ru)];
        }
        return true;
    }
};

thread_local Scratch scratch;

// True iff the block closed by tree edge (p,u) is fine for the given mode;
// pops the block's edges either way.
bool pop_block_ok(Scratch& sc, const VertexSet& t, int p, int u, Mode mode) {
    size_t end = sc.edge_stack.size();
    size_t begin = end;
    while (begin > 0) {
        --begin;
        if (sc.edge_stack[begin] == std::make_pair(p, u)) break;
    }
    size_t count = end - begin;
    bool has_terminal = false;
    for (size_t i = begin; i < end; ++i) {
        if (t.contains(sc.edge_stack[i].first) || t.contains(sc.edge_stack[i].second)) {
            has_terminal = true;
            break;
        }
    }
    bool ok = true;
    if (has_terminal) {
        if (mode == Mode::TForest) {
            ok = count < 2;  // a non-trivial block has at least 3 edges
        } else {
            ++sc.epoch;
            for (size_t i = begin; i < end; ++i) {
                if (!sc.join(sc.edge_stack[i].first, sc.edge_stack[i].second)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    sc.edge_stack.resize(begin);
    return ok;
}

bool check_sub(const Graph& g, const VertexSet& alive, const VertexSet& t, Mode mode) {
    Scratch& sc = scratch;
    sc.prepare(g.n());
    int timer = 0;

    bool failed = false;
    alive.for_each([&](int root) {
        if (failed || sc.disc[static_cast<size_t>(root)] != -1) return;
        sc.frames.push_back({root, 0});
        sc.disc[static_cast<size_t>(root)] = sc.low[static_cast<size_t>(root)] = timer++;
        while (!sc.frames.empty()) {
            int u = sc.frames.back().v;
            if (sc.frames.back().next < g.neighbors(u).size()) {
                int v = g.neighbors(u)[sc.frames.back().next++];
                if (!alive.contains(v) || v == sc.parent[static_cast<size_t>(u)]) continue;
                if (sc.disc[static_cast<size_t>(v)] == -1) {
                    sc.parent[static_cast<size_t>(v)] = u;
                    sc.edge_stack.emplace_back(u, v);
                    sc.disc[static_cast<size_t>(v)] = sc.low[static_cast<size_t>(v)] = timer++;
                    sc.frames.push_back({v, 0});
                } else if (sc.disc[static_cast<size_t>(v)] < sc.disc[static_cast<size_t>(u)]) {
                    sc.edge_stack.emplace_back(u, v);
                    sc.low[static_cast<size_t>(u)] = std::min(sc.low[static_cast<size_t>(u)],
                                                              sc.disc[static_cast<size_t>(v)]);
                }
            } else {
                sc.frames.pop_back();
                if (sc.frames.empty()) break;
                int p = sc.frames.back().v;
                sc.low[static_cast<size_t>(p)] =
                    std::min(sc.low[static_cast<size_t>(p)], sc.low[static_cast<size_t>(u)]);
                if (sc.low[static_cast<size_t>(u)] >= sc.disc[static_cast<size_t>(p)]) {
                    if (!pop_block_ok(sc, t, p, u, mode)) {
                        failed = true;
                        sc.frames.clear();
                        sc.edge_stack.clear();
                        return;
                    }
                }
            }
        }
    });
    return !failed;
}

}  // namespace

bool is_t_forest(const Graph& g, const VertexSet& t) {
    BlockDecomposition bd = block_decomposition(g);
    for (const Block& b : bd.blocks) {
        if (b.non_trivial && b.vertices.intersects(t)) return false;
    }
    return true;
}

bool is_t_bipartite(const Graph& g, const VertexSet& t) {
    BlockDecomposition bd = block_decomposition(g);
    for (const Block& b : bd.blocks) {
        if (!b.bipartite && b.vertices.intersects(t)) return false;
    }
    return true;
}

bool is_t_forest_sub(const Graph& g, const VertexSet& alive, const VertexSet& t) {
    return check_sub(g, alive, t, Mode::TForest);
}

bool is_t_bipartite_sub(const Graph& g, const VertexSet& alive, const VertexSet& t) {
    return check_sub(g, alive, t, Mode::TBipartite);
}

bool verify_solution(const Problem problem, const Graph& g, const VertexSet& t,
                     const VertexSet& s) {
    switch (problem) {
        case Problem::SubsetVertexCover: {
            bool ok = true;
            (t - s).for_each([&](int w) {
                if (!ok) return;
                if (!g.neighbor_set(w).is_subset_of(s)) ok = false;
            });
            return ok;
        }
        case Problem::SubsetFeedbackVertexSet:
            return is_t_forest_sub(g, g.vertex_set() - s, t - s);
        case Problem::SubsetOddCycleTransversal:
            return is_t_bipartite_sub(g, g.vertex_set() - s, t - s);
    }
    return false;
}

bool verify_solution(const Instance& inst, const VertexSet& s) {
    return verify_solution(inst.problem, inst.graph, inst.terminals, s);
}

bool minimum_solution_bound_holds(const VertexSet& t, const VertexSet& s) {
    return (s - t).size() <= (t - s).size();
}

std::optional<Problem> parse_problem(const std::string& name) {
    if (name == "svc") return Problem::SubsetVertexCover;
    if (name == "sfvs") return Problem::SubsetFeedbackVertexSet;
    if (name == "soct") return Problem::SubsetOddCycleTransversal;
    return std::nullopt;
}

}  // namespace subt
