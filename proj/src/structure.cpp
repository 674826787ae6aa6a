#include "trg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trg {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// 1 <= r <= d with n ≡ r (mod d).
int residue_one_based(int n, int d) {
    const int r = n % d;
    return r == 0 ? d : r;
}

[[noreturn]] void precondition(const std::string& message) {
    throw Error(ErrorCode::PreconditionViolated, message);
}

}  // namespace

std::string_view to_string(TriangleCondition condition) {
    switch (condition) {
        case TriangleCondition::I: return "i";
        case TriangleCondition::II: return "ii";
        case TriangleCondition::III: return "iii";
        case TriangleCondition::IV: return "iv";
        case TriangleCondition::V: return "v";
    }
    return "?";
}

TrianglePrediction triangle_predicate(const ToeplitzSpec& spec) {
    const int n = spec.n();
    if (spec.k1() != 2 || spec.k2() != 2) {
        precondition("triangle characterization needs |alpha| = |beta| = 2, got " +
                     spec.to_string());
    }
    if (spec.alpha()[0] + spec.beta()[1] < n || spec.alpha()[1] + spec.beta()[0] < n) {
        precondition("triangle characterization needs i1 + j2 >= n and i2 + j1 >= n, got " +
                     spec.to_string());
    }
    const auto [norm, swapped] = normalize(spec);
    const int i1 = norm.alpha()[0], i2 = norm.alpha()[1];
    const int j1 = norm.beta()[0], j2 = norm.beta()[1];

    TrianglePrediction out;
    out.swapped = swapped;
    std::array<Vertex, 3> w{};
    if (2 * i2 == 3 * i1 + j1 && n > 2 * i1 + j1) {
        out.condition = TriangleCondition::I;
        w = {1 + i1, 1 + i2, 1 + 2 * i2 - i1};
    } else if (2 * j2 == i1 + 3 * j1 && n > i1 + 2 * j1) {
        out.condition = TriangleCondition::II;
        w = {1, 1 + j2 - j1, 1 + 2 * j2 - 2 * j1};
    } else if (i2 == 3 * i1 + 2 * j1) {
        out.condition = TriangleCondition::III;
        w = {1 + i1, 1 + 2 * i1 + j1, 1 + 3 * i1 + 2 * j1};
    } else if (j2 == 2 * i1 + 3 * j1) {
        out.condition = TriangleCondition::IV;
        w = {1, 1 + i1 + j1, 1 + 2 * i1 + 2 * j1};
    } else if (i2 + j2 == 2 * (i1 + j1)) {
        out.condition = TriangleCondition::V;
        // u -> u + (j2 - j1) is a beta step and needs u <= n - j2; the
        // following alpha step needs its lower end above i1.
        const int u = std::max(1, 1 + i1 - (j2 - j1));
        w = {u, u + j2 - j1, u + i2 + j2 - (i1 + j1)};
    } else {
        return out;
    }
    if (swapped) {
        for (Vertex& v : w) v = n + 1 - v;
    }
    std::sort(w.begin(), w.end());
    out.has_triangle = true;
    out.witness = w;
    return out;
}

std::optional<ShiftResult> shift_walk(const ToeplitzSpec& spec, const std::vector<Vertex>& walk,
                                      bool closed) {
    if (!is_row_sum_le2(spec) || spec.k1() == 0 || spec.k2() == 0) {
        precondition("walk shifting needs a nonempty alpha and beta with row sums at most two, got " +
                     spec.to_string());
    }
    const int n = spec.n();
    const Graph g = rowgraph(spec);

    const std::size_t min_len = closed ? 3 : 2;
    if (walk.size() < min_len) {
        throw Error(ErrorCode::NotAWalk, closed ? "a cycle needs at least 3 vertices"
                                                : "a path needs at least 2 vertices");
    }
    std::set<Vertex> seen;
    for (Vertex v : walk) {
        if (v < 1 || v > n) throw Error(ErrorCode::NotAWalk, "vertex outside [1, n]");
        if (!seen.insert(v).second) throw Error(ErrorCode::NotAWalk, "repeated vertex in walk");
    }
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        if (!g.has_edge(walk[k], walk[k + 1])) {
            throw Error(ErrorCode::NotAWalk, "consecutive vertices " + std::to_string(walk[k]) +
                                                 " and " + std::to_string(walk[k + 1]) +
                                                 " are not adjacent");
        }
    }
    if (closed && !g.has_edge(walk.back(), walk.front())) {
        throw Error(ErrorCode::NotAWalk, "cycle does not close");
    }

    const int i1 = spec.alpha()[0];
    for (Vertex v : walk) {
        if (v == 1 || v == 1 + i1) return std::nullopt;
    }

    ShiftResult result;
    result.walk.reserve(walk.size());
    for (Vertex v : walk) result.walk.push_back(v - 1);

    if (closed) {
        result.component_guaranteed = true;
    } else {
        std::set<Vertex> forbidden{n - spec.beta()[0] + 1, n - (i1 + spec.beta()[0]) + 1};
        if (spec.k1() == 2) forbidden.insert(n - spec.alpha()[1] + i1 + 1);
        if (spec.k2() == 2) forbidden.insert(n - spec.beta()[1] + 1);
        const bool ends_ok = !forbidden.contains(walk.front()) && !forbidden.contains(walk.back());

        bool whole_component = false;
        const auto summary = components_classify(g);
        const std::vector<Vertex> members(seen.begin(), seen.end());
        for (const auto& c : summary.components) {
            if (c.kind == ComponentKind::Path && c.vertices == members) whole_component = true;
        }
        result.component_guaranteed = ends_ok && whole_component;
    }
    return result;
}

bool scarcity_check(const StructureSummary& summary) {
    const std::set<int> cycles(summary.cycle_lengths.begin(), summary.cycle_lengths.end());
    const std::set<int> paths(summary.path_orders.begin(), summary.path_orders.end());
    return cycles.size() <= 2 && paths.size() <= 6;
}

ToeplitzSpec make_path_spec(int n) {
    if (n <= 4) {
        throw Error(ErrorCode::TooSmall, "a path of order " + std::to_string(n) +
                                             " is not a row graph; requires n >= 5");
    }
    return parse_spec(n, {1, 2}, {n - 2});
}

ToeplitzSpec make_cycle_spec(int n) {
    if (n <= 4) {
        throw Error(ErrorCode::TooSmall, "a cycle of order " + std::to_string(n) +
                                             " is not a row graph; requires n >= 5");
    }
    return parse_spec(n, {1, 2}, {n - 2, n - 1});
}

ToeplitzSpec make_cycle_component_spec(int m, int n) {
    if (m < 4 || m > n) {
        throw Error(ErrorCode::InvalidRange, "cycle component construction needs 4 <= m <= n, got m=" +
                                                 std::to_string(m) + ", n=" + std::to_string(n));
    }
    if ((m == 4 && n == 4) || (m == 4 && n == 5) || (m == 6 && n == 8)) {
        throw Error(ErrorCode::Unsupported, "no construction for (m, n) = (" + std::to_string(m) +
                                                ", " + std::to_string(n) + ")");
    }
    if (n < 2 * m - 4) return parse_spec(n, {n - m + 1, n - m + 2}, {m - 2, n - 1});
    if (n == 2 * m - 4) {
        if (m == 5) return parse_spec(6, {1, 4}, {3, 5});
        return parse_spec(n, {3, 5}, {2 * m - 8, 2 * m - 7});  // m >= 7
    }
    if (n == 2 * m - 3) {
        if (m == 5) return parse_spec(7, {1, 5}, {4, 6});
        return parse_spec(n, {2, 4}, {2 * m - 6, 2 * m - 5});  // m >= 6
    }
    return parse_spec(n, {m - 2, n - 1}, {n - m + 1, n - m + 2});
}

namespace {

bool kl_admissible(int n, int i1, int i2, int j1, int j2, int k, int l) {
    const int s = i2 - i1;
    const int t = j2 - j1;
    return k >= 1 && l >= 1 && k * s <= n - 1 - i1 && l * t <= n - 1 - j1 &&
           i1 + j1 == k * s + l * t;
}

}  // namespace

std::optional<std::vector<Vertex>> kl_cycle_witness(const ToeplitzSpec& spec, int k, int l) {
    if (spec.k1() != 2 || spec.k2() != 2) {
        precondition("(k, l)-cycle needs |alpha| = |beta| = 2, got " + spec.to_string());
    }
    const int n = spec.n();
    const int i1 = spec.alpha()[0], i2 = spec.alpha()[1];
    const int j1 = spec.beta()[0], j2 = spec.beta()[1];
    if (!kl_admissible(n, i1, i2, j1, j2, k, l)) {
        precondition("(k, l) = (" + std::to_string(k) + ", " + std::to_string(l) +
                     ") violates the bounds or i1 + j1 = k (i2 - i1) + l (j2 - j1) for " +
                     spec.to_string());
    }
    const int s = i2 - i1;
    const int t = j2 - j1;
    const int p = std::max(1, 1 + k * s - j1);
    if (p > n - (i1 + j1) || p > n - l * t - j1) return std::nullopt;

    std::vector<Vertex> cycle;
    for (int q = 0; q <= l; ++q) cycle.push_back(p + q * t);
    for (int q = 1; q <= k; ++q) cycle.push_back(p + l * t + q * s);
    return cycle;
}

std::vector<std::pair<int, int>> kl_cycle_parameters(const ToeplitzSpec& spec) {
    std::vector<std::pair<int, int>> out;
    if (spec.k1() != 2 || spec.k2() != 2) return out;
    const int n = spec.n();
    const int i1 = spec.alpha()[0], i2 = spec.alpha()[1];
    const int j1 = spec.beta()[0], j2 = spec.beta()[1];
    for (int k = 1; k * (i2 - i1) <= n - 1 - i1; ++k) {
        for (int l = 1; l * (j2 - j1) <= n - 1 - j1; ++l) {
            if (kl_admissible(n, i1, i2, j1, j2, k, l)) out.emplace_back(k, l);
        }
    }
    return out;
}

std::vector<Vertex> symmetric_cycle_witness(int n, int u1, int u2) {
    if (u1 < 1 || u1 >= u2 || u1 + u2 > n) {
        precondition("symmetric cycle witness needs 1 <= u1 < u2 and u1 + u2 <= n");
    }
    std::vector<Vertex> cycle;
    Vertex x = 1;
    do {
        cycle.push_back(x);
        x = (x <= u2) ? x + u1 : x - u2;
    } while (x != 1);
    return cycle;
}

ModDecomposition mod_class_decomposition(int n, const std::vector<int>& gamma) {
    if (gamma.empty()) precondition("residue decomposition needs a nonempty difference set");
    const Graph g = symmetric_toeplitz_graph(n, gamma);
    const int d = std::accumulate(gamma.begin(), gamma.end(), 0,
                                  [](int acc, int x) { return std::gcd(acc, x); });
    if (d < 2) {
        precondition("residue decomposition needs gcd(gamma) >= 2, got " + std::to_string(d));
    }

    ModDecomposition out;
    out.d = d;
    out.r = residue_one_based(n, d);
    std::set<int> reduced;
    for (int x : gamma) reduced.insert(x / d);
    out.reduced_gamma.assign(reduced.begin(), reduced.end());

    out.cross_class_edges = static_cast<std::size_t>(std::count_if(
        g.edges().begin(), g.edges().end(),
        [d](const Edge& e) { return (e.v - e.u) % d != 0; }));

    const int big = ceil_div(n, d);
    for (int i = 1; i <= d; ++i) {
        ResidueClass cls;
        cls.residue = i;
        for (Vertex v = i; v <= n; v += d) cls.vertices.push_back(v);
        cls.target_order = i <= out.r ? big : big - 1;
        for (std::size_t l = 0; l < cls.vertices.size(); ++l) {
            cls.image.push_back(static_cast<Vertex>(1 + l));
        }

        // Target graph: differences of gamma/d that fit inside the smaller order.
        std::vector<int> fitting;
        for (int x : out.reduced_gamma) {
            if (x <= cls.target_order - 1) fitting.push_back(x);
        }
        bool ok = static_cast<int>(cls.vertices.size()) == cls.target_order;
        if (ok && cls.target_order >= 1) {
            const Graph target = symmetric_toeplitz_graph(cls.target_order, fitting);
            for (std::size_t a = 0; ok && a < cls.vertices.size(); ++a) {
                for (std::size_t b = a + 1; ok && b < cls.vertices.size(); ++b) {
                    ok = g.has_edge(cls.vertices[a], cls.vertices[b]) ==
                         target.has_edge(cls.image[a], cls.image[b]);
                }
            }
        }
        cls.isomorphism_verified = ok;
        out.classes.push_back(std::move(cls));
    }
    return out;
}

CycleVerdict cycle_verdict_two_one(const ToeplitzSpec& spec) {
    if (!is_row_sum_le2(spec)) {
        precondition("cycle verdict needs row sums at most two, got " + spec.to_string());
    }
    const int n = spec.n();
    int near = 0, far = 0, single = 0;  // two-element side (near < far) and the lone offset
    CycleVerdict verdict;
    if (spec.k1() == 2 && spec.k2() == 1) {
        near = spec.alpha()[0];
        far = spec.alpha()[1];
        single = spec.beta()[0];
        verdict.orientation = Orientation::Direct;
    } else if (spec.k1() == 1 && spec.k2() == 2) {
        near = spec.beta()[0];
        far = spec.beta()[1];
        single = spec.alpha()[0];
        verdict.orientation = Orientation::Mirrored;
    } else {
        precondition("cycle verdict needs |alpha| + |beta| = 3 with both nonempty, got " +
                     spec.to_string());
    }
    const int d = std::gcd(near + single, far - near);
    const int r = residue_one_based(n, d);
    verdict.d = d;
    verdict.r = r;
    verdict.exists = far != 2 * near + single && far + single <= d * ceil_div(n, d) && 1 + near <= r;
    if (verdict.exists) verdict.predicted_length = ceil_div(n, d);
    return verdict;
}

bool is_boundary_spec(const ToeplitzSpec& spec) {
    if (spec.k1() != 2 || spec.k2() != 2) return false;
    const int n = spec.n();
    return spec.alpha()[0] + spec.beta()[1] == n && spec.alpha()[1] + spec.beta()[0] == n;
}

BoundaryPrediction boundary_family_structure(const ToeplitzSpec& spec) {
    if (!is_boundary_spec(spec)) {
        precondition("boundary family needs T_n⟨i1,i2;j1,j2⟩ with i1 + j2 = i2 + j1 = n, got " +
                     spec.to_string());
    }
    const int n = spec.n();
    const int sum = spec.alpha()[0] + spec.beta()[0];
    if (2 * sum == n) {
        precondition("boundary family excludes 2 (i1 + j1) = n, got " + spec.to_string());
    }
    BoundaryPrediction out;
    out.gamma = {std::min(sum, n - sum), std::max(sum, n - sum)};
    out.d = std::gcd(n, sum);
    out.cycle_count = out.d;
    out.cycle_length = n / out.d;
    return out;
}

bool is_single_cycle(const ToeplitzSpec& spec) {
    return is_boundary_spec(spec) && std::gcd(spec.n(), spec.alpha()[0] + spec.beta()[0]) == 1;
}

bool connected_triangle_free_check(const ToeplitzSpec& spec) {
    const auto summary = components_classify(rowgraph(spec));
    return summary.components.size() == 1 && summary.triangle_free;
}

}  // namespace trg
