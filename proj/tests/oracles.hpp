#pragma once

// Independent brute-force reference implementations used only by the tests.
// They work from the raw (n, alpha, beta) triple and plain adjacency sets,
// deliberately sharing no code with the library.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace trg::oracle {

using EdgeSet = std::set<std::pair<int, int>>;

/// t(i, j) = 1 iff i - j in alpha or j - i in beta.
bool entry(const std::vector<int>& alpha, const std::vector<int>& beta, int i, int j);

/// u < v adjacent iff some column c has t(u, c) = t(v, c) = 1.
EdgeSet row_graph(int n, const std::vector<int>& alpha, const std::vector<int>& beta);

/// Edges {x, y} with |x - y| in gamma.
EdgeSet symmetric_graph(int n, const std::vector<int>& gamma);

/// Three-colour DFS on the digraph i -> j iff t(i, j) = 1.
bool has_directed_cycle(int n, const std::vector<int>& alpha, const std::vector<int>& beta);

/// Does the digraph contain a directed cycle of exactly this length?
/// (exhaustive DFS over simple paths from each smallest vertex)
bool has_directed_cycle_of_length(int n, const std::vector<int>& alpha,
                                  const std::vector<int>& beta, int length);

struct Component {
    std::vector<int> vertices;
    std::size_t edges = 0;
    int max_degree = 0;
    int min_degree = 0;
};

/// Union-find components, ordered by smallest vertex.
std::vector<Component> components(int n, const EdgeSet& edges);

/// "Cycle:4+Path:4"-style encoding computed from components().
std::string encoding(int n, const EdgeSet& edges);

/// Any triangle by triple loop.
bool has_triangle(int n, const EdgeSet& edges);

/// Whether the graph contains any cycle (edges >= vertices in some component).
bool has_cycle(int n, const EdgeSet& edges);

/// Number of (alpha, beta) with alpha, beta disjoint subsets of [n-1],
/// |alpha| <= max_k1, |beta| <= max_k2 (negative = unlimited), not both empty.
std::uint64_t count_specs(int n, int max_k1, int max_k2);

/// Every disjoint (alpha, beta) pair for order n (not both empty), in no
/// particular order.
std::vector<std::pair<std::vector<int>, std::vector<int>>> all_pairs(int n);

/// gamma(alpha, beta) by pair enumeration.
std::vector<int> envelope(int n, const std::vector<int>& alpha, const std::vector<int>& beta);

}  // namespace trg::oracle
