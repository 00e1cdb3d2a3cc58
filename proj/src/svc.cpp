#include "subt/svc.hpp"

#include <string>
#include <vector>

#include "subt/errors.hpp"
#include "subt/oracle.hpp"
#include "subt/patterns.hpp"
#include "subt/validity.hpp"

namespace subt {

namespace {

constexpr int kOracleFallbackLimit = 20;

std::vector<VertexSet> cotree_leafsets(const Cotree& tree, int n) {
    std::vector<VertexSet> leafsets(tree.nodes.size(), VertexSet(n));
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        const Cotree::Node& nd = tree.nodes[i];
        if (nd.kind == Cotree::Kind::Leaf) {
            leafsets[i].insert(nd.vertex);
        } else {
            leafsets[i] = leafsets[static_cast<size_t>(nd.left)] |
                          leafsets[static_cast<size_t>(nd.right)];
        }
    }
    return leafsets;
}

Cotree require_cotree(const Graph& g) {
    CotreeResult res = build_modified_cotree(g);
    if (auto* fail = std::get_if<NotCograph>(&res)) {
        throw NotInClassError("P4", {fail->witness.begin(), fail->witness.end()});
    }
    return std::get<Cotree>(std::move(res));
}

}  // namespace

std::vector<VertexSet> svc_cotree_tables(const Graph& g, const Cotree& tree,
                                         const VertexSet& t) {
    std::vector<VertexSet> leafsets = cotree_leafsets(tree, g.n());
    std::vector<VertexSet> cover(tree.nodes.size(), VertexSet(g.n()));
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        const Cotree::Node& nd = tree.nodes[i];
        switch (nd.kind) {
            case Cotree::Kind::Leaf:
                break;  // empty cover
            case Cotree::Kind::Union:
                cover[i] = cover[static_cast<size_t>(nd.left)] |
                           cover[static_cast<size_t>(nd.right)];
                break;
            case Cotree::Kind::Join: {
                const VertexSet& ly = leafsets[static_cast<size_t>(nd.left)];
                const VertexSet& lz = leafsets[static_cast<size_t>(nd.right)];
                VertexSet best = cover[static_cast<size_t>(nd.left)] | lz;
                VertexSet alt = cover[static_cast<size_t>(nd.right)] | ly;
                if (alt.size() < best.size()) best = std::move(alt);
                VertexSet all_t = t & (ly | lz);
                if (all_t.size() < best.size()) best = std::move(all_t);
                cover[i] = std::move(best);
                break;
            }
        }
    }
    return cover;
}

Solution svc_p4free(const Graph& g, const VertexSet& t) {
    if (g.n() == 0) return Solution{Problem::SubsetVertexCover, VertexSet(0), true};
    Cotree tree = require_cotree(g);
    std::vector<VertexSet> cover = svc_cotree_tables(g, tree, t);
    VertexSet s = cover[static_cast<size_t>(tree.root)];
    Solution out{Problem::SubsetVertexCover, s,
                 verify_solution(Problem::SubsetVertexCover, g, t, s)};
    return out;
}

SvcBranchResult svc_extension_branch(const Graph& g, const VertexSet& t,
                                     const SvcInnerSolver& inner) {
    SvcBranchResult best{t, -1};
    t.for_each([&](int u) {
        VertexSet removed = g.closed_neighborhood(u);
        VertexSet keep = g.vertex_set() - removed;
        InducedSubgraph sub = induced_subgraph(g, keep);
        VertexSet sub_t(sub.graph.n());
        (t - removed).for_each([&](int w) {
            sub_t.insert(sub.from_original[static_cast<size_t>(w)]);
        });
        VertexSet inner_solution = inner(sub.graph, sub_t);
        VertexSet candidate = g.neighbor_set(u);
        inner_solution.for_each([&](int w) {
            candidate.insert(sub.to_original[static_cast<size_t>(w)]);
        });
        if (better_solution_set(candidate, best.solution)) {
            best = SvcBranchResult{std::move(candidate), u};
        }
    });
    return best;
}

namespace {

VertexSet svc_nested(const Graph& g, const VertexSet& t, int depth) {
    if (depth == 0) return svc_p4free(g, t).vertices;
    SvcInnerSolver inner = [depth](const Graph& sub, const VertexSet& sub_t) {
        return svc_nested(sub, sub_t, depth - 1);
    };
    return svc_extension_branch(g, t, inner).solution;
}

}  // namespace

Solution svc_sp1p4free(const Graph& g, const VertexSet& t, int s) {
    if (s < 0) throw Error("svc_sp1p4free: s must be non-negative");
    if (auto witness = find_induced(g, PatternGraph::sp1_plus_p4(s))) {
        throw NotInClassError(std::to_string(s) + "P1+P4", *witness);
    }
    VertexSet sol = svc_nested(g, t, s);
    return Solution{Problem::SubsetVertexCover, sol,
                    verify_solution(Problem::SubsetVertexCover, g, t, sol)};
}

Solution svc_solve(const Instance& inst, int s_max, std::string* route_used) {
    const Graph& g = inst.graph;
    auto set_route = [&](const std::string& r) {
        if (route_used != nullptr) *route_used = r;
    };
    if (inst.s.has_value()) {
        set_route("sp1p4free(s=" + std::to_string(*inst.s) + ")");
        return svc_sp1p4free(g, inst.terminals, *inst.s);
    }
    if (!find_induced(g, PatternGraph::path(4)).has_value()) {
        set_route("p4free");
        return svc_p4free(g, inst.terminals);
    }
    for (int s = 1; s <= s_max; ++s) {
        if (!find_induced(g, PatternGraph::sp1_plus_p4(s)).has_value()) {
            set_route("sp1p4free(s=" + std::to_string(s) + ")");
            return svc_sp1p4free(g, inst.terminals, s);
        }
    }
    if (g.n() <= kOracleFallbackLimit) {
        set_route("brute");
        Instance tmp = inst;
        tmp.problem = Problem::SubsetVertexCover;
        return brute_force_minimum(tmp);
    }
    auto witness = find_induced(g, PatternGraph::sp1_plus_p4(s_max));
    throw NotInClassError(std::to_string(s_max) + "P1+P4",
                          witness.value_or(std::vector<int>{}));
}

}  // namespace subt
