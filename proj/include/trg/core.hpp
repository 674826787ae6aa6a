#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "trg/error.hpp"

namespace trg {

/// 1-based vertex / row / column index.
using Vertex = int;

/// The triple (n, alpha, beta) describing the (0,1)-Toeplitz matrix with ones
/// on the subdiagonals at offsets alpha and the superdiagonals at offsets beta.
///
/// Always valid once constructed: 2 <= n, alpha and beta are strictly
/// increasing, disjoint, contained in [1, n-1], and not both empty. The only
/// way to obtain one is parse_spec().
class ToeplitzSpec {
public:
    int n() const noexcept { return n_; }
    const std::vector<int>& alpha() const noexcept { return alpha_; }
    const std::vector<int>& beta() const noexcept { return beta_; }
    int k1() const noexcept { return static_cast<int>(alpha_.size()); }
    int k2() const noexcept { return static_cast<int>(beta_.size()); }

    bool in_alpha(int offset) const;
    bool in_beta(int offset) const;

    /// t_{i,j} for 1-based i, j (no bounds check beyond returning 0).
    bool entry(Vertex i, Vertex j) const;

    /// Human-readable form, e.g. "T_6⟨1,3;2,5⟩".
    std::string to_string() const;

    // Ordering is (n, alpha, beta) with lexicographic sequence comparison.
    auto operator<=>(const ToeplitzSpec&) const = default;
    bool operator==(const ToeplitzSpec&) const = default;

private:
    ToeplitzSpec(int n, std::vector<int> alpha, std::vector<int> beta)
        : n_(n), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    friend ToeplitzSpec parse_spec(int n, std::vector<int> alpha, std::vector<int> beta);

    int n_;
    std::vector<int> alpha_;
    std::vector<int> beta_;
};

/// Validates and canonicalizes (sorts) the offsets.
///
/// Throws Error with OutOfRange (element outside [1, n-1]), Duplicate,
/// Overlap (alpha and beta intersect), BothEmpty, or InvalidOrder (n < 2).
ToeplitzSpec parse_spec(int n, std::vector<int> alpha, std::vector<int> beta);

/// Dense square (0,1)-matrix with 1-based accessors.
class BooleanMatrix {
public:
    explicit BooleanMatrix(int order);

    int order() const noexcept { return order_; }

    bool operator()(Vertex row, Vertex col) const {
        return bits_[index(row, col)] != 0;
    }
    void set(Vertex row, Vertex col, bool value) {
        bits_[index(row, col)] = value ? 1 : 0;
    }

    int row_count(Vertex row) const;
    int col_count(Vertex col) const;

    bool has_zero_diagonal() const;
    /// Constant along every diagonal.
    bool is_toeplitz() const;

    /// n lines of n '0'/'1' characters, each terminated by '\n'.
    std::string to_text() const;
    /// Inverse of to_text(); trailing newline optional. Throws ParseError.
    static BooleanMatrix from_text(const std::string& text);

    bool operator==(const BooleanMatrix&) const = default;

private:
    std::size_t index(Vertex row, Vertex col) const {
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(order_) +
               static_cast<std::size_t>(col - 1);
    }

    int order_;
    std::vector<std::uint8_t> bits_;
};

/// T = sum L^{i} over alpha + sum U^{j} over beta.
BooleanMatrix build_matrix(const ToeplitzSpec& spec);

/// Recovers the spec of a Toeplitz matrix in the family (zero diagonal,
/// no symmetric pair of ones). Throws PreconditionViolated otherwise.
ToeplitzSpec spec_from_matrix(const BooleanMatrix& matrix);

/// Number of ones in row (resp. column) ell of build_matrix(spec), computed
/// from the offsets. Throws IndexOutOfRange unless 1 <= ell <= n.
int row_sum(const ToeplitzSpec& spec, Vertex ell);
int col_sum(const ToeplitzSpec& spec, Vertex ell);

int max_row_sum(const ToeplitzSpec& spec);
int max_col_sum(const ToeplitzSpec& spec);

/// Closed-form membership test for the family with maximum row sum <= 2:
/// with both sides nonempty, k1, k2 <= 2 and k2 = 2 => i1 + j2 >= n and
/// k1 = 2 => i2 + j1 >= n; with one side empty, the other has <= 2 elements.
bool is_row_sum_le2(const ToeplitzSpec& spec);

struct Normalized {
    ToeplitzSpec spec;
    bool swapped;
};

/// Swaps alpha and beta when min(alpha) > min(beta), giving i1 < j1. The
/// row graphs of input and output correspond under v -> n + 1 - v. Specs
/// with an empty side are returned unchanged.
Normalized normalize(const ToeplitzSpec& spec);

/// The spec with alpha and beta exchanged (the matrix P T P^T).
ToeplitzSpec mirror(const ToeplitzSpec& spec);

/// True iff the digraph of build_matrix(spec) has no directed cycle
/// (topological sort on the digraph, not a closed form).
bool is_digraph_acyclic(const ToeplitzSpec& spec);

/// {(i + j) / gcd(i, j) : i in alpha, j in beta, i + j <= n}, the lengths of
/// directed cycles guaranteed to exist in the digraph of the matrix.
std::set<int> digraph_cycle_lengths(const ToeplitzSpec& spec);

/// One directed cycle of the given guaranteed length built from the offset
/// pair (i, j) with i + j <= n: walk +j while it stays inside [1, i + j],
/// otherwise -i, starting at 1. Returns the vertex sequence (first vertex
/// not repeated). Throws PreconditionViolated if i is not in alpha, j is not
/// in beta, or i + j > n.
std::vector<Vertex> directed_cycle_witness(const ToeplitzSpec& spec, int i, int j);

}  // namespace trg
