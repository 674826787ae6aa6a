#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace trg::oracle {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<std::vector<int>> out_lists(int n, const std::vector<int>& alpha,
                                        const std::vector<int>& beta) {
    std::vector<std::vector<int>> out(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (entry(alpha, beta, i, j)) out[i].push_back(j);
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

bool entry(const std::vector<int>& alpha, const std::vector<int>& beta, int i, int j) {
    return contains(alpha, i - j) || contains(beta, j - i);
}

EdgeSet row_graph(int n, const std::vector<int>& alpha, const std::vector<int>& beta) {
    EdgeSet edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            for (int c = 1; c <= n; ++c)
                if (entry(alpha, beta, u, c) && entry(alpha, beta, v, c)) {
                    edges.insert({u, v});
                    break;
                }
    return edges;
}

EdgeSet symmetric_graph(int n, const std::vector<int>& gamma) {
    EdgeSet edges;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (contains(gamma, y - x)) edges.insert({x, y});
    return edges;
}

bool has_directed_cycle(int n, const std::vector<int>& alpha, const std::vector<int>& beta) {
    const auto out = out_lists(n, alpha, beta);
    std::vector<int> colour(n + 1, 0);
    std::function<bool(int)> dfs = [&](int v) {
        colour[v] = 1;
        for (int w : out[v]) {
            if (colour[w] == 1) return true;
            if (colour[w] == 0 && dfs(w)) return true;
        }
        colour[v] = 2;
        return false;
    };
    for (int v = 1; v <= n; ++v)
        if (colour[v] == 0 && dfs(v)) return true;
    return false;
}

bool has_directed_cycle_of_length(int n, const std::vector<int>& alpha, const std::vector<int>& beta,
                                  int length) {
    const auto out = out_lists(n, alpha, beta);
    std::vector<bool> on_path(n + 1, false);
    // Cycles are rooted at their smallest vertex.
    std::function<bool(int, int, int)> dfs = [&](int root, int v, int depth) {
        for (int w : out[v]) {
            if (w == root && depth == length) return true;
            if (w <= root || on_path[w] || depth >= length) continue;
            on_path[w] = true;
            const bool found = dfs(root, w, depth + 1);
            on_path[w] = false;
            if (found) return true;
        }
        return false;
    };
    for (int root = 1; root <= n; ++root) {
        on_path[root] = true;
        const bool found = dfs(root, root, 1);
        on_path[root] = false;
        if (found) return true;
    }
    return false;
}

std::vector<Component> components(int n, const EdgeSet& edges) {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<int> degree(n + 1, 0);
    for (const auto& [u, v] : edges) {
        parent[find(u)] = find(v);
        ++degree[u];
        ++degree[v];
    }
    std::map<int, Component> by_root;
    std::vector<int> order;
    for (int v = 1; v <= n; ++v) {
        const int r = find(v);
        auto [it, fresh] = by_root.try_emplace(r);
        if (fresh) {
            order.push_back(r);
            it->second.min_degree = degree[v];
        }
        it->second.vertices.push_back(v);
        it->second.max_degree = std::max(it->second.max_degree, degree[v]);
        it->second.min_degree = std::min(it->second.min_degree, degree[v]);
    }
    for (const auto& [u, v] : edges) ++by_root[find(u)].edges;
    std::vector<Component> out;
    for (int r : order) out.push_back(by_root[r]);
    return out;
}

std::string encoding(int n, const EdgeSet& edges) {
    std::vector<std::pair<std::string, int>> terms;
    for (const auto& c : components(n, edges)) {
        const int size = static_cast<int>(c.vertices.size());
        std::string kind;
        if (size == 1) {
            kind = "Isolated";
        } else if (c.edges + 1 == c.vertices.size() && c.max_degree <= 2) {
            kind = "Path";
        } else if (size >= 3 && c.edges == c.vertices.size() && c.max_degree == 2 && c.min_degree == 2) {
            kind = "Cycle";
        } else {
            kind = "Other";
        }
        terms.emplace_back(kind, size);
    }
    std::sort(terms.begin(), terms.end());
    std::string out;
    for (const auto& [kind, size] : terms) {
        if (!out.empty()) out += '+';
        out += kind + ":" + std::to_string(size);
    }
    return out;
}

bool has_triangle(int n, const EdgeSet& edges) {
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (edges.count({a, b}))
                for (int c = b + 1; c <= n; ++c)
                    if (edges.count({a, c}) && edges.count({b, c})) return true;
    return false;
}

bool has_cycle(int n, const EdgeSet& edges) {
    for (const auto& c : components(n, edges))
        if (c.edges >= c.vertices.size()) return true;
    return false;
}

std::uint64_t count_specs(int n, int max_k1, int max_k2) {
    const int m = n - 1;
    const int l1 = max_k1 < 0 ? m : std::min(max_k1, m);
    const int l2 = max_k2 < 0 ? m : std::min(max_k2, m);
    std::uint64_t total = 0;
    for (int a = 0; a <= l1; ++a)
        for (int b = 0; b <= l2 && a + b <= m; ++b) total += binomial(m, a) * binomial(m - a, b);
    return total - 1;  // both empty
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> all_pairs(int n) {
    // Each offset goes to alpha, beta, or neither: base-3 counter.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::uint64_t total = 1;
    for (int i = 1; i < n; ++i) total *= 3;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<int> alpha, beta;
        std::uint64_t c = code;
        for (int x = 1; x < n; ++x, c /= 3) {
            if (c % 3 == 1) alpha.push_back(x);
            if (c % 3 == 2) beta.push_back(x);
        }
        out.emplace_back(std::move(alpha), std::move(beta));
    }
    return out;
}

std::vector<int> envelope(int n, const std::vector<int>& alpha, const std::vector<int>& beta) {
    std::set<int> g;
    auto add = [&](int x) {
        if (x >= 1 && x <= n - 1) g.insert(x);
    };
    for (int a : alpha)
        for (int b : alpha)
            if (a < b) add(b - a);
    for (int a : beta)
        for (int b : beta)
            if (a < b) add(b - a);
    for (int a : alpha)
        for (int b : beta) add(a + b);
    return {g.begin(), g.end()};
}

}  // namespace trg::oracle
