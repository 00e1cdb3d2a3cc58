#include "subt/cotree.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace subt {

namespace {

// Components of the complement of G[alive], computed without materializing
// the complement: repeatedly move every still-unvisited non-neighbor of the
// frontier vertex into the current component.
std::vector<VertexSet> co_components(const Graph& g, const VertexSet& alive) {
    std::vector<VertexSet> comps;
    VertexSet unvisited = alive;
    while (!unvisited.empty()) {
        int start = unvisited.min();
        unvisited.erase(start);
        VertexSet comp(g.n());
        comp.insert(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            VertexSet next = unvisited - g.neighbor_set(u);
            next.for_each([&](int v) {
                unvisited.erase(v);
                comp.insert(v);
                stack.push_back(v);
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool induces_p4(const Graph& g, int a, int b, int c, int d) {
    const int vs[4] = {a, b, c, d};
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
        }
    }
    if (edges != 3) return false;
    int ones = 0, twos = 0;
    for (int i = 0; i < 4; ++i) {
        if (deg[i] == 1) ++ones;
        if (deg[i] == 2) ++twos;
    }
    // 3 edges with degree sequence (1,1,2,2) pins down the 4-vertex path.
    return ones == 2 && twos == 2;
}

std::array<int, 4> find_p4_witness(const Graph& g, const VertexSet& region) {
    std::vector<int> vs = region.to_vector();
    const size_t k = vs.size();
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
            for (size_t c = b + 1; c < k; ++c)
                for (size_t d = c + 1; d < k; ++d)
                    if (induces_p4(g, vs[a], vs[b], vs[c], vs[d]))
                        return {vs[a], vs[b], vs[c], vs[d]};
    assert(false && "connected co-connected region without an induced P4");
    return {-1, -1, -1, -1};
}

struct Builder {
    const Graph& g;
    Cotree tree;
    std::optional<NotCograph> failure;

    int add_leaf(int v) {
        tree.nodes.push_back({Cotree::Kind::Leaf, v, -1, -1});
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    int add_internal(Cotree::Kind kind, int l, int r) {
        tree.nodes.push_back({kind, -1, l, r});
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    // Left-fold of parts (already ascending by minimum vertex) under `kind`.
    int fold(Cotree::Kind kind, const std::vector<int>& part_roots) {
        int acc = part_roots[0];
        for (size_t i = 1; i < part_roots.size(); ++i) {
            acc = add_internal(kind, acc, part_roots[i]);
        }
        return acc;
    }

    int build(const VertexSet& vs) {
        if (failure.has_value()) return -1;
        if (vs.size() == 1) return add_leaf(vs.min());

        std::vector<VertexSet> parts = connected_components_sub(g, vs);
        Cotree::Kind kind = Cotree::Kind::Union;
        if (parts.size() == 1) {
            parts = co_components(g, vs);
            kind = Cotree::Kind::Join;
            if (parts.size() == 1) {
                failure = NotCograph{find_p4_witness(g, vs)};
                return -1;
            }
        }
        std::sort(parts.begin(), parts.end(),
                  [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
        std::vector<int> roots;
        roots.reserve(parts.size());
        for (const VertexSet& p : parts) {
            int r = build(p);
            if (failure.has_value()) return -1;
            roots.push_back(r);
        }
        return fold(kind, roots);
    }
};

void to_string_rec(const Cotree& t, int node, std::string& out) {
    const Cotree::Node& nd = t.nodes[static_cast<size_t>(node)];
    if (nd.kind == Cotree::Kind::Leaf) {
        out += std::to_string(nd.vertex);
        return;
    }
    out += (nd.kind == Cotree::Kind::Join) ? "(J " : "(U ";
    to_string_rec(t, nd.left, out);
    out += " ";
    to_string_rec(t, nd.right, out);
    out += ")";
}

}  // namespace

CotreeResult build_modified_cotree(const Graph& g) {
    assert(g.n() >= 1);
    Builder b{g, {}, std::nullopt};
    int root = b.build(g.vertex_set());
    if (b.failure.has_value()) return *b.failure;
    b.tree.root = root;
    return std::move(b.tree);
}

Graph realize_cotree(const Cotree& t, int n) {
    std::vector<VertexSet> leafsets(t.nodes.size(), VertexSet(n));
    std::vector<std::pair<int, int>> edges;
    // Nodes are created children-first, so a forward pass is bottom-up.
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const Cotree::Node& nd = t.nodes[i];
        if (nd.kind == Cotree::Kind::Leaf) {
            leafsets[i].insert(nd.vertex);
            continue;
        }
        leafsets[i] = leafsets[static_cast<size_t>(nd.left)] |
                      leafsets[static_cast<size_t>(nd.right)];
        if (nd.kind == Cotree::Kind::Join) {
            leafsets[static_cast<size_t>(nd.left)].for_each([&](int u) {
                leafsets[static_cast<size_t>(nd.right)].for_each([&](int v) {
                    edges.emplace_back(u, v);
                });
            });
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_string(const Cotree& t) {
    std::string out;
    to_string_rec(t, t.root, out);
    return out;
}

}  // namespace subt
