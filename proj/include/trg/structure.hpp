#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trg/core.hpp"
#include "trg/graph.hpp"
#include "trg/rowgraph.hpp"

namespace trg {

// --- triangles --------------------------------------------------------------

enum class TriangleCondition { I, II, III, IV, V };

/// Roman-numeral label: "i" .. "v".
std::string_view to_string(TriangleCondition condition);

struct TrianglePrediction {
    bool has_triangle = false;
    std::optional<TriangleCondition> condition;
    std::optional<std::array<Vertex, 3>> witness;  // sorted, in the input's labelling
    bool swapped = false;                          // normalize() exchanged alpha and beta
};

/// Closed-form triangle test for T_n⟨i1,i2;j1,j2⟩ with i1 + j2 >= n and
/// i2 + j1 >= n. The spec is normalized to i1 < j1 first; the witness is
/// mapped back through v -> n + 1 - v when that swapped the sides.
///
/// Conditions, checked in order (normalized offsets):
///   (i)   2 i2 = 3 i1 + j1 and n > 2 i1 + j1
///   (ii)  2 j2 = i1 + 3 j1 and n > i1 + 2 j1
///   (iii) i2 = 3 i1 + 2 j1
///   (iv)  j2 = 2 i1 + 3 j1
///   (v)   i2 + j2 = 2 (i1 + j1)
///
/// Throws PreconditionViolated outside that domain.
TrianglePrediction triangle_predicate(const ToeplitzSpec& spec);

// --- shifting walks ---------------------------------------------------------

struct ShiftResult {
    std::vector<Vertex> walk;  // every vertex decremented by one
    /// The input was a whole path component whose ends avoid
    /// {n-i2+i1+1, n-j2+1, n-j1+1, n-(i1+j1)+1}, or a cycle (cycles are
    /// always components when every degree is at most two). The shifted
    /// walk is then again a component.
    bool component_guaranteed = false;
};

/// Shifts a path (closed = false) or cycle (closed = true) of RG(spec) down by
/// one vertex. Returns nullopt when the walk touches 1 or 1 + i1.
///
/// Throws PreconditionViolated unless the maximum row sum is at most two and
/// both alpha and beta are nonempty; throws NotAWalk when the sequence is not
/// a path (at least 2 distinct vertices) or cycle (at least 3) of RG(spec).
std::optional<ShiftResult> shift_walk(const ToeplitzSpec& spec, const std::vector<Vertex>& walk,
                                      bool closed);

// --- component scarcity -----------------------------------------------------

/// At most two distinct cycle lengths and at most six distinct path orders.
bool scarcity_check(const StructureSummary& summary);

// --- constructions ----------------------------------------------------------

/// T_n⟨1,2;n-2⟩, whose row graph is a Hamiltonian path. Throws TooSmall for n <= 4.
ToeplitzSpec make_path_spec(int n);
/// T_n⟨1,2;n-2,n-1⟩, whose row graph is a Hamiltonian cycle. Throws TooSmall for n <= 4.
ToeplitzSpec make_cycle_spec(int n);

/// A spec of order n in the row-sum-two family whose row graph has a cycle
/// component of length m. Throws Unsupported for (m, n) in
/// {(4,4), (4,5), (6,8)} and InvalidRange unless 4 <= m <= n.
ToeplitzSpec make_cycle_component_spec(int m, int n);

/// Vertex sequence p, p+t, ..., p+l*t, p+l*t+s, ..., p+l*t+k*s with
/// s = i2 - i1, t = j2 - j1 and p the smallest admissible start. This is a
/// cycle of length k + l + 1 in RG(spec).
///
/// Requires k1 = k2 = 2, 1 <= k <= (n-1-i1)/s, 1 <= l <= (n-1-j1)/t and
/// i1 + j1 = k s + l t; throws PreconditionViolated otherwise.
std::optional<std::vector<Vertex>> kl_cycle_witness(const ToeplitzSpec& spec, int k, int l);

/// Every (k, l) satisfying kl_cycle_witness's preconditions (empty unless
/// k1 = k2 = 2), in increasing k.
std::vector<std::pair<int, int>> kl_cycle_parameters(const ToeplitzSpec& spec);

/// Cycle of length (u1 + u2) / gcd(u1, u2) in ST_n⟨u1,u2⟩: start at 1, step
/// +u1 while staying inside [1, u1 + u2], otherwise -u2. Throws
/// PreconditionViolated unless 1 <= u1 < u2 and u1 + u2 <= n.
std::vector<Vertex> symmetric_cycle_witness(int n, int u1, int u2);

// --- residue classes ----------------------------------------------------------

struct ResidueClass {
    int residue;                     // i in [1, d]
    std::vector<Vertex> vertices;    // i, i + d, i + 2d, ...
    int target_order;                // ceil(n/d) if i <= r, else ceil(n/d) - 1
    std::vector<Vertex> image;       // image[l] = phi(i + d l) = 1 + l
    bool isomorphism_verified;       // checked pair by pair against ST_target⟨gamma/d⟩
};

struct ModDecomposition {
    int d;
    int r;                          // 1 <= r <= d, n ≡ r (mod d)
    std::vector<int> reduced_gamma;  // gamma / d
    std::vector<ResidueClass> classes;
    std::size_t cross_class_edges;  // edges of ST_n⟨gamma⟩ joining different classes
};

/// Splits ST_n⟨gamma⟩ by vertex residue mod d = gcd(gamma) and verifies each
/// class against the smaller symmetric Toeplitz graph it is claimed to equal.
/// Throws PreconditionViolated for empty gamma or d < 2, OutOfRange for an
/// element outside [1, n-1].
ModDecomposition mod_class_decomposition(int n, const std::vector<int>& gamma);

// --- cycles for |alpha| + |beta| = 3 -----------------------------------------

enum class Orientation { Direct, Mirrored };

struct CycleVerdict {
    bool exists = false;
    std::optional<int> predicted_length;  // ceil(n/d) when exists
    int d = 0;
    int r = 0;
    Orientation orientation = Orientation::Direct;
};

/// For T_n⟨i1,i2;j1⟩ (Direct): d = gcd(i1 + j1, i2 - i1), and a cycle exists
/// iff i2 != 2 i1 + j1, i2 + j1 <= d ceil(n/d) and 1 + i1 <= r.
/// For T_n⟨i1;j1,j2⟩ (Mirrored): d = gcd(i1 + j1, j2 - j1), and a cycle exists
/// iff j2 != i1 + 2 j1, i1 + j2 <= d ceil(n/d) and 1 + j1 <= r.
/// Throws PreconditionViolated for any other shape or when the maximum row
/// sum exceeds two.
CycleVerdict cycle_verdict_two_one(const ToeplitzSpec& spec);

// --- boundary family: i1 + j2 = i2 + j1 = n -------------------------------------

bool is_boundary_spec(const ToeplitzSpec& spec);

struct BoundaryPrediction {
    std::vector<int> gamma;  // {i1 + j1, n - (i1 + j1)}, sorted
    int d;                   // gcd(n, i1 + j1)
    int cycle_count;         // d
    int cycle_length;        // n / d
};

/// Throws PreconditionViolated unless k1 = k2 = 2, i1 + j2 = i2 + j1 = n and
/// 2 (i1 + j1) != n.
BoundaryPrediction boundary_family_structure(const ToeplitzSpec& spec);

/// k1 = k2 = 2, i1 + j2 = i2 + j1 = n and gcd(n, i1 + j1) = 1.
bool is_single_cycle(const ToeplitzSpec& spec);

/// RG(spec) is connected and triangle-free (decided on the oracle graph).
bool connected_triangle_free_check(const ToeplitzSpec& spec);

}  // namespace trg
