#include "trg/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::Overlap: return "Overlap";
        case ErrorCode::BothEmpty: return "BothEmpty";
        case ErrorCode::Duplicate: return "Duplicate";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotAWalk: return "NotAWalk";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::UnknownTheorem: return "UnknownTheorem";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string join(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    return out.str();
}

void validate_side(int n, std::vector<int>& side, const char* name) {
    for (int v : side) {
        if (v < 1 || v > n - 1) {
            throw Error(ErrorCode::OutOfRange, std::string(name) + " element " + std::to_string(v) +
                                                   " is outside [1, " + std::to_string(n - 1) + "]");
        }
    }
    std::sort(side.begin(), side.end());
    if (auto dup = std::adjacent_find(side.begin(), side.end()); dup != side.end()) {
        throw Error(ErrorCode::Duplicate,
                    std::string(name) + " lists " + std::to_string(*dup) + " more than once");
    }
}

}  // namespace

ToeplitzSpec parse_spec(int n, std::vector<int> alpha, std::vector<int> beta) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidOrder, "order n must be at least 2, got " + std::to_string(n));
    }
    validate_side(n, alpha, "alpha");
    validate_side(n, beta, "beta");
    if (alpha.empty() && beta.empty()) {
        throw Error(ErrorCode::BothEmpty, "alpha and beta are both empty");
    }
    std::vector<int> common;
    std::set_intersection(alpha.begin(), alpha.end(), beta.begin(), beta.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
        throw Error(ErrorCode::Overlap,
                    "alpha and beta share offset " + std::to_string(common.front()));
    }
    return ToeplitzSpec(n, std::move(alpha), std::move(beta));
}

bool ToeplitzSpec::in_alpha(int offset) const {
    return std::binary_search(alpha_.begin(), alpha_.end(), offset);
}

bool ToeplitzSpec::in_beta(int offset) const {
    return std::binary_search(beta_.begin(), beta_.end(), offset);
}

bool ToeplitzSpec::entry(Vertex i, Vertex j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return i > j ? in_alpha(i - j) : (j > i && in_beta(j - i));
}

std::string ToeplitzSpec::to_string() const {
    return "T_" + std::to_string(n_) + "⟨" + join(alpha_) + ";" + join(beta_) + "⟩";
}

BooleanMatrix::BooleanMatrix(int order) : order_(order) {
    if (order < 1) throw Error(ErrorCode::InvalidOrder, "matrix order must be positive");
    bits_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
}

int BooleanMatrix::row_count(Vertex row) const {
    int count = 0;
    for (Vertex c = 1; c <= order_; ++c) count += (*this)(row, c);
    return count;
}

int BooleanMatrix::col_count(Vertex col) const {
    int count = 0;
    for (Vertex r = 1; r <= order_; ++r) count += (*this)(r, col);
    return count;
}

bool BooleanMatrix::has_zero_diagonal() const {
    for (Vertex i = 1; i <= order_; ++i) {
        if ((*this)(i, i)) return false;
    }
    return true;
}

bool BooleanMatrix::is_toeplitz() const {
    for (Vertex i = 2; i <= order_; ++i) {
        for (Vertex j = 2; j <= order_; ++j) {
            if ((*this)(i, j) != (*this)(i - 1, j - 1)) return false;
        }
    }
    return true;
}

std::string BooleanMatrix::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_ + 1));
    for (Vertex r = 1; r <= order_; ++r) {
        for (Vertex c = 1; c <= order_; ++c) out.push_back((*this)(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BooleanMatrix BooleanMatrix::from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (lines.empty()) throw Error(ErrorCode::ParseError, "empty matrix text");
    const int n = static_cast<int>(lines.size());
    BooleanMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(lines[r].size()) != n) {
            throw Error(ErrorCode::ParseError, "matrix line " + std::to_string(r + 1) + " has " +
                                                   std::to_string(lines[r].size()) +
                                                   " characters, expected " + std::to_string(n));
        }
        for (int c = 0; c < n; ++c) {
            const char ch = lines[r][c];
            if (ch != '0' && ch != '1') {
                throw Error(ErrorCode::ParseError, std::string("unexpected character '") + ch +
                                                       "' in matrix text");
            }
            m.set(r + 1, c + 1, ch == '1');
        }
    }
    return m;
}

BooleanMatrix build_matrix(const ToeplitzSpec& spec) {
    const int n = spec.n();
    BooleanMatrix m(n);
    for (int a : spec.alpha()) {
        for (Vertex c = 1; c + a <= n; ++c) m.set(c + a, c, true);
    }
    for (int b : spec.beta()) {
        for (Vertex r = 1; r + b <= n; ++r) m.set(r, r + b, true);
    }
    return m;
}

ToeplitzSpec spec_from_matrix(const BooleanMatrix& matrix) {
    if (!matrix.is_toeplitz() || !matrix.has_zero_diagonal()) {
        throw Error(ErrorCode::PreconditionViolated,
                    "matrix is not a Toeplitz matrix with zero diagonal");
    }
    const int n = matrix.order();
    std::vector<int> alpha, beta;
    for (int d = 1; d < n; ++d) {
        if (matrix(1 + d, 1)) alpha.push_back(d);
        if (matrix(1, 1 + d)) beta.push_back(d);
    }
    try {
        return parse_spec(n, std::move(alpha), std::move(beta));
    } catch (const Error& e) {
        throw Error(ErrorCode::PreconditionViolated,
                    std::string("matrix is outside the family: ") + e.what());
    }
}

int row_sum(const ToeplitzSpec& spec, Vertex ell) {
    const int n = spec.n();
    if (ell < 1 || ell > n) {
        throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(ell) +
                                                    " outside [1, " + std::to_string(n) + "]");
    }
    int count = 0;
    for (int a : spec.alpha()) count += (ell - a >= 1);
    for (int b : spec.beta()) count += (ell + b <= n);
    return count;
}

int col_sum(const ToeplitzSpec& spec, Vertex ell) {
    const int n = spec.n();
    if (ell < 1 || ell > n) {
        throw Error(ErrorCode::IndexOutOfRange, "column index " + std::to_string(ell) +
                                                    " outside [1, " + std::to_string(n) + "]");
    }
    int count = 0;
    for (int a : spec.alpha()) count += (ell + a <= n);
    for (int b : spec.beta()) count += (ell - b >= 1);
    return count;
}

int max_row_sum(const ToeplitzSpec& spec) {
    int best = 0;
    for (Vertex ell = 1; ell <= spec.n(); ++ell) best = std::max(best, row_sum(spec, ell));
    return best;
}

int max_col_sum(const ToeplitzSpec& spec) {
    int best = 0;
    for (Vertex ell = 1; ell <= spec.n(); ++ell) best = std::max(best, col_sum(spec, ell));
    return best;
}

bool is_row_sum_le2(const ToeplitzSpec& spec) {
    const int k1 = spec.k1();
    const int k2 = spec.k2();
    if (k1 == 0 || k2 == 0) return k1 + k2 <= 2;
    if (k1 > 2 || k2 > 2) return false;
    const int n = spec.n();
    const auto& a = spec.alpha();
    const auto& b = spec.beta();
    if (k2 == 2 && a[0] + b[1] < n) return false;
    if (k1 == 2 && a[1] + b[0] < n) return false;
    return true;
}

ToeplitzSpec mirror(const ToeplitzSpec& spec) {
    return parse_spec(spec.n(), spec.beta(), spec.alpha());
}

Normalized normalize(const ToeplitzSpec& spec) {
    if (spec.alpha().empty() || spec.beta().empty() || spec.alpha()[0] < spec.beta()[0]) {
        return {spec, false};
    }
    return {mirror(spec), true};
}

bool is_digraph_acyclic(const ToeplitzSpec& spec) {
    const BooleanMatrix m = build_matrix(spec);
    const int n = m.order();
    std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex c = 1; c <= n; ++c) indegree[c] = m.col_count(c);
    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    int removed = 0;
    while (!ready.empty()) {
        const Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w = 1; w <= n; ++w) {
            if (m(v, w) && --indegree[w] == 0) ready.push_back(w);
        }
    }
    return removed == n;
}

std::set<int> digraph_cycle_lengths(const ToeplitzSpec& spec) {
    std::set<int> lengths;
    for (int a : spec.alpha()) {
        for (int b : spec.beta()) {
            if (a + b <= spec.n()) lengths.insert((a + b) / std::gcd(a, b));
        }
    }
    return lengths;
}

std::vector<Vertex> directed_cycle_witness(const ToeplitzSpec& spec, int i, int j) {
    if (!spec.in_alpha(i) || !spec.in_beta(j) || i + j > spec.n()) {
        throw Error(ErrorCode::PreconditionViolated,
                    "directed cycle witness needs i in alpha, j in beta and i + j <= n");
    }
    std::vector<Vertex> cycle;
    Vertex x = 1;
    do {
        cycle.push_back(x);
        x = (x <= i) ? x + j : x - i;
    } while (x != 1);
    return cycle;
}

}  // namespace trg
