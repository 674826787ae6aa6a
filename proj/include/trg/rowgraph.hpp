#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trg/core.hpp"
#include "trg/graph.hpp"

namespace trg {

// --- row graph engines -----------------------------------------------------

/// Ground truth: u ~ v iff rows u and v share a 1 in some column. Works for
/// any square boolean matrix.
Graph rowgraph_oracle(const BooleanMatrix& matrix);

/// Shorthand for rowgraph_oracle(build_matrix(spec)).
Graph rowgraph(const ToeplitzSpec& spec);

/// Adjacency from the offsets alone. For i < j, {i, j} is an edge iff
///   (1) j - i = i_t - i_s, i_s in alpha ∩ [i-1], i_t in alpha ∩ [j-1], s < t;
///   (2) j - i = j_q - j_p, j_q in beta ∩ [n-i], j_p in beta ∩ [n-j], p < q; or
///   (3) j - i = i_t + j_q for some i_t in alpha, j_q in beta.
Graph rowgraph_closed_form(const ToeplitzSpec& spec);

/// Linear-size edge rule valid when the maximum row sum is at most two:
///   v = u + j2 - j1 for 1 <= u <= n - j2,
///   v = u + i2 - i1 for i1 + 1 <= u <= n - i2 + i1,
///   v = u + i1 + j1 for 1 <= u <= n - i1 - j1,
/// skipping rules whose offsets do not exist. Throws PreconditionViolated
/// when is_row_sum_le2(spec) is false.
Graph rowgraph_bounded(const ToeplitzSpec& spec);

// --- classification --------------------------------------------------------

enum class ComponentKind { Isolated, Path, Cycle, Other };

std::string_view to_string(ComponentKind kind);

struct ComponentSummary {
    ComponentKind kind;
    int size;  // vertex count (order for paths, length for cycles)
    std::vector<Vertex> vertices;  // sorted

    bool operator==(const ComponentSummary&) const = default;
};

struct StructureSummary {
    std::vector<ComponentSummary> components;  // ordered by smallest vertex
    bool triangle_free = true;
    std::vector<int> cycle_lengths;  // sorted multiset
    std::vector<int> path_orders;    // sorted multiset, excludes isolated vertices

    /// "kind:size" terms joined by '+', sorted by kind name then size,
    /// e.g. "Cycle:4+Path:4". Empty graph order is impossible (n >= 1).
    std::string encoding() const;

    std::size_t count(ComponentKind kind) const;

    bool operator==(const StructureSummary&) const = default;
};

StructureSummary components_classify(const Graph& graph);

/// Lexicographically smallest triangle (sorted triple), if any.
std::optional<std::array<Vertex, 3>> has_triangle(const Graph& graph);

// --- symmetric Toeplitz graphs ----------------------------------------------

/// Graph on 1..n with x ~ y iff |x - y| in gamma. Throws OutOfRange for an
/// element outside [1, n-1]. An empty gamma yields the edgeless graph.
Graph symmetric_toeplitz_graph(int n, const std::vector<int>& gamma);

/// gamma(alpha, beta): pairwise differences within alpha, within beta, and
/// cross sums alpha + beta, each restricted to [1, n-1]. Sorted, unique.
std::vector<int> gamma_envelope(const ToeplitzSpec& spec);

/// 2 (k n - sum(gamma)), the number of ones in the symmetric Toeplitz matrix
/// with offset set gamma. Throws OutOfRange like symmetric_toeplitz_graph and
/// PreconditionViolated if k != |gamma|.
long long symmetric_ones_count(int n, const std::vector<int>& gamma, int k);
long long symmetric_ones_count(int n, const std::vector<int>& gamma);

}  // namespace trg
