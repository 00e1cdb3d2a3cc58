#pragma once

#include <optional>
#include <string>

#include "subt/graph.hpp"
#include "subt/vertex_set.hpp"

namespace subt {

enum class Problem {
    SubsetVertexCover,
    SubsetFeedbackVertexSet,
    SubsetOddCycleTransversal,
};

inline const char* to_string(Problem p) {
    switch (p) {
        case Problem::SubsetVertexCover: return "svc";
        case Problem::SubsetFeedbackVertexSet: return "sfvs";
        case Problem::SubsetOddCycleTransversal: return "soct";
    }
    return "?";
}

std::optional<Problem> parse_problem(const std::string& name);

/// One solvable unit: graph, terminals, problem tag, and (for the
/// (sP1+P3)/(sP1+P4) routes) the class parameter s.
struct Instance {
    Graph graph;
    VertexSet terminals;
    Problem problem = Problem::SubsetVertexCover;
    std::optional<int> s;
};

struct Solution {
    Problem problem = Problem::SubsetVertexCover;
    VertexSet vertices;
    bool validated = false;

    int size() const { return vertices.size(); }
};

}  // namespace subt
