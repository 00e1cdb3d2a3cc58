#include "subt/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "subt/errors.hpp"

namespace subt {

namespace {

std::vector<std::pair<int, int>> path_edges(int offset, int r) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < r; ++i) e.emplace_back(offset + i, offset + i + 1);
    return e;
}

}  // namespace

PatternGraph::PatternGraph(Graph g, std::string name)
    : graph_(std::move(g)), name_(std::move(name)) {
    if (graph_.n() > kMaxVertices) {
        throw PatternTooLargeError("pattern " + name_ + " has " + std::to_string(graph_.n()) +
                                   " vertices, limit is " + std::to_string(kMaxVertices));
    }
    if (graph_.n() < 1) {
        throw Error("pattern " + name_ + " must have at least one vertex");
    }
}

PatternGraph PatternGraph::path(int r) {
    return PatternGraph(Graph::from_edges(r, path_edges(0, r)), "P" + std::to_string(r));
}

PatternGraph PatternGraph::cycle(int r) {
    auto e = path_edges(0, r);
    e.emplace_back(r - 1, 0);
    return PatternGraph(Graph::from_edges(r, e), "C" + std::to_string(r));
}

PatternGraph PatternGraph::complete(int r) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) e.emplace_back(i, j);
    return PatternGraph(Graph::from_edges(r, e), "K" + std::to_string(r));
}

PatternGraph PatternGraph::independent(int s) {
    return PatternGraph(Graph::from_edges(s, {}), std::to_string(s) + "P1");
}

PatternGraph PatternGraph::matching(int s) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < s; ++i) e.emplace_back(2 * i, 2 * i + 1);
    return PatternGraph(Graph::from_edges(2 * s, e), std::to_string(s) + "P2");
}

PatternGraph PatternGraph::claw() {
    return PatternGraph(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), "K1,3");
}

PatternGraph PatternGraph::sp1_plus_p3(int s) {
    return PatternGraph(Graph::from_edges(s + 3, path_edges(s, 3)),
                        std::to_string(s) + "P1+P3");
}

PatternGraph PatternGraph::sp1_plus_p4(int s) {
    return PatternGraph(Graph::from_edges(s + 4, path_edges(s, 4)),
                        std::to_string(s) + "P1+P4");
}

PatternGraph PatternGraph::custom(Graph g, std::string name) {
    return PatternGraph(std::move(g), std::move(name));
}

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;      // pattern vertices, high degree first
    std::vector<int> assign;     // order position -> graph vertex
    std::vector<bool> used;      // graph vertex already taken
    std::vector<int> result;     // pattern vertex -> graph vertex

    bool extend(size_t pos) {
        if (pos == order.size()) {
            result.assign(static_cast<size_t>(h.n()), -1);
            for (size_t i = 0; i < order.size(); ++i) {
                result[static_cast<size_t>(order[i])] = assign[i];
            }
            return true;
        }
        int p = order[pos];
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (g.degree(cand) < h.degree(p)) continue;
            bool ok = true;
            for (size_t j = 0; j < pos; ++j) {
                bool want = h.adjacent(p, order[j]);
                bool have = g.adjacent(cand, assign[j]);
                if (want != have) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[static_cast<size_t>(cand)] = true;
            assign[pos] = cand;
            if (extend(pos + 1)) return true;
            used[static_cast<size_t>(cand)] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const PatternGraph& h) {
    const Graph& hg = h.graph();
    if (g.n() < hg.n()) return std::nullopt;

    InducedSearch search{g, hg, {}, {}, {}, {}};
    search.order.resize(static_cast<size_t>(hg.n()));
    std::iota(search.order.begin(), search.order.end(), 0);
    // Connected, high-degree pattern vertices first: isolated P1 parts match
    // almost anywhere and are cheapest to place last.
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&hg](int a, int b) { return hg.degree(a) > hg.degree(b); });
    search.assign.assign(search.order.size(), -1);
    search.used.assign(static_cast<size_t>(g.n()), false);

    if (search.extend(0)) return search.result;
    return std::nullopt;
}

bool check_induced_embedding(const Graph& g, const PatternGraph& h,
                             const std::vector<int>& map) {
    const Graph& hg = h.graph();
    if (static_cast<int>(map.size()) != hg.n()) return false;
    for (int u = 0; u < hg.n(); ++u) {
        if (map[static_cast<size_t>(u)] < 0 || map[static_cast<size_t>(u)] >= g.n()) {
            return false;
        }
        for (int v = u + 1; v < hg.n(); ++v) {
            if (map[static_cast<size_t>(u)] == map[static_cast<size_t>(v)]) return false;
            if (hg.adjacent(u, v) !=
                g.adjacent(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) {
                return false;
            }
        }
    }
    return true;
}

ClassReport classify(const Graph& g, int s_max) {
    if (s_max > 8) throw Error("classify: s_max must be at most 8");
    ClassReport r;
    r.p4_free = !find_induced(g, PatternGraph::path(4)).has_value();
    r.split = !find_induced(g, PatternGraph::cycle(4)).has_value() &&
              !find_induced(g, PatternGraph::cycle(5)).has_value() &&
              !find_induced(g, PatternGraph::matching(2)).has_value();
    r.claw_free = !find_induced(g, PatternGraph::claw()).has_value();
    for (int s = 0; s <= s_max; ++s) {
        if (!find_induced(g, PatternGraph::sp1_plus_p3(s)).has_value()) {
            r.sp1p3_s = s;
            break;
        }
    }
    for (int s = 0; s <= s_max; ++s) {
        if (!find_induced(g, PatternGraph::sp1_plus_p4(s)).has_value()) {
            r.sp1p4_s = s;
            break;
        }
    }
    return r;
}

}  // namespace subt
