#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "subt/graph.hpp"

namespace subt {

/// Binary cotree: every internal node has exactly two children. Leaves carry
/// original vertex ids. After binarization, labels along a root-to-leaf path
/// need not alternate.
struct Cotree {
    enum class Kind : uint8_t { Leaf, Union, Join };

    struct Node {
        Kind kind;
        int vertex = -1;  // Leaf only
        int left = -1;
        int right = -1;
    };

    std::vector<Node> nodes;
    int root = -1;

    int leaf_count() const {
        int c = 0;
        for (const Node& nd : nodes) c += (nd.kind == Kind::Leaf) ? 1 : 0;
        return c;
    }
};

/// Recognition failure: four vertices inducing a path.
struct NotCograph {
    std::array<int, 4> witness;
};

using CotreeResult = std::variant<Cotree, NotCograph>;

/// Recursive union/join decomposition. On failure the witness is extracted
/// from the first connected, co-connected subgraph encountered.
CotreeResult build_modified_cotree(const Graph& g);

/// Rebuilds the graph the cotree describes (n = vertex count of the original).
Graph realize_cotree(const Cotree& t, int n);

/// Nested text form, e.g. "(J (U 0 1) 2)".
std::string to_string(const Cotree& t);

}  // namespace subt
