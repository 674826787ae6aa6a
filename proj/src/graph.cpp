#include "trg/graph.hpp"

#include <algorithm>
#include <string>

namespace trg {

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u < 1 || e.v < 1 || e.u > order_ || e.v > order_) {
            throw Error(ErrorCode::OutOfRange, "edge {" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + "} leaves [1, " +
                                                   std::to_string(order_) + "]");
        }
        if (e.u == e.v) {
            throw Error(ErrorCode::PreconditionViolated, "loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(order_) + 1);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    return order_ == other.order_ &&
           std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

}  // namespace trg
