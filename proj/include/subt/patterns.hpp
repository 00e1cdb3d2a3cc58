#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subt/graph.hpp"

namespace subt {

/// A small named forbidden pattern H. Capacity is capped so that the
/// backtracking search in find_induced stays cheap.
class PatternGraph {
public:
    static constexpr int kMaxVertices = 12;

    static PatternGraph path(int r);                       // P_r
    static PatternGraph cycle(int r);                      // C_r
    static PatternGraph complete(int r);                   // K_r
    static PatternGraph independent(int s);                // sP1
    static PatternGraph matching(int s);                   // sP2
    static PatternGraph claw();                            // K_{1,3}
    static PatternGraph sp1_plus_p3(int s);                // sP1 + P3
    static PatternGraph sp1_plus_p4(int s);                // sP1 + P4
    static PatternGraph custom(Graph g, std::string name);

    const Graph& graph() const { return graph_; }
    const std::string& name() const { return name_; }

private:
    PatternGraph(Graph g, std::string name);

    Graph graph_;
    std::string name_;
};

/// Injective map phi with uv in E(H) iff phi(u)phi(v) in E(G), or nullopt if
/// G is H-free. Deterministic: backtracking over a fixed vertex order with
/// ascending candidates.
std::optional<std::vector<int>> find_induced(const Graph& g, const PatternGraph& h);

/// True when `map` embeds the pattern into g as an induced subgraph.
bool check_induced_embedding(const Graph& g, const PatternGraph& h,
                             const std::vector<int>& map);

struct ClassReport {
    bool p4_free = false;
    bool split = false;
    bool claw_free = false;
    std::optional<int> sp1p3_s;  // smallest s <= s_max with G (sP1+P3)-free
    std::optional<int> sp1p4_s;  // smallest s <= s_max with G (sP1+P4)-free
};

/// Membership flags for the classes the solvers accept. Split is decided via
/// its forbidden patterns C4, C5, 2P2.
ClassReport classify(const Graph& g, int s_max);

}  // namespace subt
