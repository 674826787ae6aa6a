#pragma once

#include <compare>
#include <vector>

#include "trg/core.hpp"

namespace trg {

/// Unordered pair stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph on vertices 1..order with a canonical
/// (lexicographically sorted, duplicate-free) edge list.
class Graph {
public:
    explicit Graph(int order) : order_(order) {}

    /// Accepts pairs in either orientation and any order; duplicates are
    /// merged. Throws OutOfRange for an endpoint outside [1, order] and
    /// PreconditionViolated for a loop.
    Graph(int order, std::vector<Edge> edges);

    int order() const noexcept { return order_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_edge(Vertex a, Vertex b) const;

    /// adjacency()[v] lists the sorted neighbours of v; index 0 is unused.
    std::vector<std::vector<Vertex>> adjacency() const;

    /// Every edge of this graph is an edge of other (same order).
    bool is_subgraph_of(const Graph& other) const;

    bool operator==(const Graph&) const = default;

private:
    int order_;
    std::vector<Edge> edges_;
};

}  // namespace trg
