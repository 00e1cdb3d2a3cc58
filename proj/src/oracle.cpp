#include "subt/oracle.hpp"

#include <string>
#include <vector>

#include "subt/errors.hpp"
#include "subt/validity.hpp"

namespace subt {

namespace {

constexpr int kBruteForceLimit = 24;
constexpr int kCycleEnumLimit = 12;

VertexSet from_indices(int n, const std::vector<int>& idx, int k) {
    VertexSet s(n);
    for (int i = 0; i < k; ++i) s.insert(idx[static_cast<size_t>(i)]);
    return s;
}

}  // namespace

Solution brute_force_minimum(const Instance& inst) {
    const Graph& g = inst.graph;
    const int n = g.n();
    if (n > kBruteForceLimit) {
        throw InstanceTooLargeError("brute_force_minimum: n = " + std::to_string(n) +
                                    " exceeds limit " + std::to_string(kBruteForceLimit));
    }
    const VertexSet& t = inst.terminals;
    const int t_size = t.size();

    std::vector<int> idx(static_cast<size_t>(n));
    for (int k = 0; k <= n; ++k) {
        // k-subsets in lexicographic order; the first valid hit is the
        // lexicographically smallest minimum solution.
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            VertexSet s = from_indices(n, idx, k);
            int in_t = (s & t).size();
            // |S\T| <= |T\S|
            if (k - in_t <= t_size - in_t && verify_solution(inst.problem, g, t, s)) {
                return Solution{inst.problem, s, true};
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
        }
    }
    // T itself is always a solution, so the loop cannot fall through for any
    // problem; reaching here means the empty graph case.
    return Solution{inst.problem, VertexSet(n), true};
}

namespace {

struct CycleEnum {
    const Graph& g;
    const VertexSet& t;
    bool odd_only;  // look for odd violating cycles (T-bipartite test)

    std::vector<int> path;
    std::vector<bool> on_path;
    bool found = false;

    // Extends simple paths anchored at their minimum vertex; a cycle is
    // counted once, when closed back to the anchor from the path end.
    void dfs(int anchor, int u) {
        if (found) return;
        for (int v : g.neighbors(u)) {
            if (found) return;
            if (v == anchor && path.size() >= 3) {
                bool hits_t = false;
                for (int w : path) {
                    if (t.contains(w)) {
                        hits_t = true;
                        break;
                    }
                }
                if (hits_t && (!odd_only || path.size() % 2 == 1)) {
                    found = true;
                    return;
                }
            }
            if (v <= anchor || on_path[static_cast<size_t>(v)]) continue;
            path.push_back(v);
            on_path[static_cast<size_t>(v)] = true;
            dfs(anchor, v);
            on_path[static_cast<size_t>(v)] = false;
            path.pop_back();
        }
    }

    bool has_violating_cycle() {
        on_path.assign(static_cast<size_t>(g.n()), false);
        for (int a = 0; a < g.n() && !found; ++a) {
            path.assign(1, a);
            on_path[static_cast<size_t>(a)] = true;
            dfs(a, a);
            on_path[static_cast<size_t>(a)] = false;
        }
        return found;
    }
};

void check_cycle_enum_size(const Graph& g) {
    if (g.n() > kCycleEnumLimit) {
        throw InstanceTooLargeError("naive cycle enumeration: n = " + std::to_string(g.n()) +
                                    " exceeds limit " + std::to_string(kCycleEnumLimit));
    }
}

}  // namespace

bool naive_is_t_forest(const Graph& g, const VertexSet& t) {
    check_cycle_enum_size(g);
    CycleEnum e{g, t, false, {}, {}, false};
    return !e.has_violating_cycle();
}

bool naive_is_t_bipartite(const Graph& g, const VertexSet& t) {
    check_cycle_enum_size(g);
    CycleEnum e{g, t, true, {}, {}, false};
    return !e.has_violating_cycle();
}

}  // namespace subt
