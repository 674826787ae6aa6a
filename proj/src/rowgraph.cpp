#include "trg/rowgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace trg {

Graph rowgraph_oracle(const BooleanMatrix& matrix) {
    const int n = matrix.order();
    std::vector<Edge> edges;
    std::vector<Vertex> rows;
    for (Vertex col = 1; col <= n; ++col) {
        rows.clear();
        for (Vertex r = 1; r <= n; ++r) {
            if (matrix(r, col)) rows.push_back(r);
        }
        for (std::size_t a = 0; a < rows.size(); ++a) {
            for (std::size_t b = a + 1; b < rows.size(); ++b) edges.push_back({rows[a], rows[b]});
        }
    }
    return Graph(n, std::move(edges));
}

Graph rowgraph(const ToeplitzSpec& spec) { return rowgraph_oracle(build_matrix(spec)); }

Graph rowgraph_closed_form(const ToeplitzSpec& spec) {
    const int n = spec.n();
    const auto& alpha = spec.alpha();
    const auto& beta = spec.beta();

    std::vector<char> cross(static_cast<std::size_t>(n), 0);
    for (int a : alpha) {
        for (int b : beta) {
            if (a + b < n) cross[a + b] = 1;
        }
    }

    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            const int diff = j - i;
            bool adjacent = cross[diff] != 0;
            // (1): both rows reach a common column to their left.
            for (std::size_t s = 0; !adjacent && s < alpha.size() && alpha[s] <= i - 1; ++s) {
                for (std::size_t t = s + 1; t < alpha.size() && alpha[t] <= j - 1; ++t) {
                    if (alpha[t] - alpha[s] == diff) {
                        adjacent = true;
                        break;
                    }
                }
            }
            // (2): common column to the right of both rows.
            for (std::size_t q = 1; !adjacent && q < beta.size() && beta[q] <= n - i; ++q) {
                for (std::size_t p = 0; p < q && beta[p] <= n - j; ++p) {
                    if (beta[q] - beta[p] == diff) {
                        adjacent = true;
                        break;
                    }
                }
            }
            if (adjacent) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

Graph rowgraph_bounded(const ToeplitzSpec& spec) {
    if (!is_row_sum_le2(spec)) {
        throw Error(ErrorCode::PreconditionViolated,
                    spec.to_string() + " has a row with more than two ones");
    }
    const int n = spec.n();
    const auto& alpha = spec.alpha();
    const auto& beta = spec.beta();
    std::vector<Edge> edges;
    if (beta.size() == 2) {
        const int step = beta[1] - beta[0];
        for (Vertex u = 1; u <= n - beta[1]; ++u) edges.push_back({u, u + step});
    }
    if (alpha.size() == 2) {
        const int step = alpha[1] - alpha[0];
        for (Vertex u = alpha[0] + 1; u <= n - alpha[1] + alpha[0]; ++u) {
            edges.push_back({u, u + step});
        }
    }
    if (!alpha.empty() && !beta.empty()) {
        const int step = alpha[0] + beta[0];
        for (Vertex u = 1; u <= n - step; ++u) edges.push_back({u, u + step});
    }
    return Graph(n, std::move(edges));
}

std::string_view to_string(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::Isolated: return "Isolated";
        case ComponentKind::Path: return "Path";
        case ComponentKind::Cycle: return "Cycle";
        case ComponentKind::Other: return "Other";
    }
    return "Other";
}

std::string StructureSummary::encoding() const {
    std::vector<std::pair<std::string_view, int>> terms;
    terms.reserve(components.size());
    for (const auto& c : components) terms.emplace_back(to_string(c.kind), c.size);
    std::sort(terms.begin(), terms.end());
    std::string out;
    for (const auto& [kind, size] : terms) {
        if (!out.empty()) out += '+';
        out += kind;
        out += ':';
        out += std::to_string(size);
    }
    return out;
}

std::size_t StructureSummary::count(ComponentKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        components.begin(), components.end(), [kind](const auto& c) { return c.kind == kind; }));
}

StructureSummary components_classify(const Graph& graph) {
    const int n = graph.order();
    const auto adj = graph.adjacency();
    std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
    StructureSummary summary;

    for (Vertex start = 1; start <= n; ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(summary.components.size());
        std::vector<Vertex> members{start};
        label[start] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (Vertex w : adj[members[head]]) {
                if (label[w] < 0) {
                    label[w] = id;
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());

        std::size_t degree_sum = 0;
        std::size_t max_degree = 0;
        bool all_two = true;
        for (Vertex v : members) {
            degree_sum += adj[v].size();
            max_degree = std::max(max_degree, adj[v].size());
            all_two = all_two && adj[v].size() == 2;
        }
        const std::size_t size = members.size();
        const std::size_t edge_count = degree_sum / 2;

        ComponentKind kind = ComponentKind::Other;
        if (size == 1) {
            kind = ComponentKind::Isolated;
        } else if (edge_count + 1 == size && max_degree <= 2) {
            kind = ComponentKind::Path;
        } else if (size >= 3 && edge_count == size && all_two) {
            kind = ComponentKind::Cycle;
        }
        if (kind == ComponentKind::Path) summary.path_orders.push_back(static_cast<int>(size));
        if (kind == ComponentKind::Cycle) summary.cycle_lengths.push_back(static_cast<int>(size));
        summary.components.push_back({kind, static_cast<int>(size), std::move(members)});
    }
    std::sort(summary.cycle_lengths.begin(), summary.cycle_lengths.end());
    std::sort(summary.path_orders.begin(), summary.path_orders.end());
    summary.triangle_free = !has_triangle(graph).has_value();
    return summary;
}

std::optional<std::array<Vertex, 3>> has_triangle(const Graph& graph) {
    const auto adj = graph.adjacency();
    // Edges are sorted, so the first (a, b) with a common neighbour c > b
    // gives the lexicographically smallest triangle.
    for (const Edge& e : graph.edges()) {
        const auto& nu = adj[e.u];
        const auto& nv = adj[e.v];
        auto it = std::upper_bound(nv.begin(), nv.end(), e.v);
        for (; it != nv.end(); ++it) {
            if (std::binary_search(nu.begin(), nu.end(), *it)) {
                return std::array<Vertex, 3>{e.u, e.v, *it};
            }
        }
    }
    return std::nullopt;
}

namespace {

void check_gamma(int n, const std::vector<int>& gamma) {
    for (int g : gamma) {
        if (g < 1 || g > n - 1) {
            throw Error(ErrorCode::OutOfRange, "difference " + std::to_string(g) +
                                                   " is outside [1, " + std::to_string(n - 1) + "]");
        }
    }
}

}  // namespace

Graph symmetric_toeplitz_graph(int n, const std::vector<int>& gamma) {
    if (n < 1) throw Error(ErrorCode::InvalidOrder, "order must be positive");
    check_gamma(n, gamma);
    std::vector<Edge> edges;
    for (int g : gamma) {
        for (Vertex x = 1; x + g <= n; ++x) edges.push_back({x, x + g});
    }
    return Graph(n, std::move(edges));
}

std::vector<int> gamma_envelope(const ToeplitzSpec& spec) {
    const int n = spec.n();
    const auto& alpha = spec.alpha();
    const auto& beta = spec.beta();
    std::vector<int> gamma;
    auto keep = [&](int value) {
        if (value >= 1 && value <= n - 1) gamma.push_back(value);
    };
    for (std::size_t s = 0; s < alpha.size(); ++s) {
        for (std::size_t t = s + 1; t < alpha.size(); ++t) keep(alpha[t] - alpha[s]);
    }
    for (std::size_t s = 0; s < beta.size(); ++s) {
        for (std::size_t t = s + 1; t < beta.size(); ++t) keep(beta[t] - beta[s]);
    }
    for (int a : alpha) {
        for (int b : beta) keep(a + b);
    }
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    return gamma;
}

long long symmetric_ones_count(int n, const std::vector<int>& gamma, int k) {
    check_gamma(n, gamma);
    if (k != static_cast<int>(gamma.size())) {
        throw Error(ErrorCode::PreconditionViolated, "k must equal |gamma|");
    }
    const long long total = std::accumulate(gamma.begin(), gamma.end(), 0LL);
    return 2 * (static_cast<long long>(k) * n - total);
}

long long symmetric_ones_count(int n, const std::vector<int>& gamma) {
    return symmetric_ones_count(n, gamma, static_cast<int>(gamma.size()));
}

}  // namespace trg
