#pragma once

// Simple undirected graph on vertices 0..n-1. Immutable once built, so
// instances can be shared freely across harness workers.

#include <algorithm>
#include <utility>
#include <vector>

#include "hcdual/errors.hpp"

namespace hcdual {

class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n), adj_(n, std::vector<bool>(n, false)) {
        if (n < 0) throw contract_error("Graph: negative vertex count");
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw contract_error("Graph: vertex out of range");
            if (u == v) throw contract_error("Graph: self-loop");
            adj_[u][v] = adj_[v][u] = true;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj_[u][v]) edges_.emplace_back(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u][v];
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (adj_[v][u]) ++d;
        return d;
    }

    // sorted lexicographically, u < v
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<bool> seen(n_, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u)
                if (adj_[v][u] && !seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw contract_error("Graph: vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> adj_;
};

// 1 iff {u,v} is not an edge. Self-pairs count as non-edges: the complement
// of E over ordered pairs contains the diagonal, and the walk dynamic
// program needs a defined cost for repeating a vertex.
inline int nonedge_penalty(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw contract_error("nonedge_penalty: vertex index out of range");
    if (u == v) return 1;
    return g.adjacent(u, v) ? 0 : 1;
}

} // namespace hcdual
