#include "trg/explorer.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "trg/structure.hpp"

namespace trg {

void check_range(NRange range) {
    if (range.lo < 2 || range.hi < range.lo || range.hi > kMaxOrder) {
        throw Error(ErrorCode::InvalidRange, "order range " + std::to_string(range.lo) + ".." +
                                                 std::to_string(range.hi) + " must lie within 2.." +
                                                 std::to_string(kMaxOrder));
    }
}

bool SpecFilter::accepts(const ToeplitzSpec& spec) const {
    switch (kind) {
        case FilterKind::All: return true;
        case FilterKind::Bounded: return is_row_sum_le2(spec);
        case FilterKind::Shape: return spec.k1() == k1 && spec.k2() == k2;
        case FilterKind::Boundary: return is_boundary_spec(spec);
    }
    return false;
}

namespace {

/// Preorder walk over subsets of `pool` (sorted) of size <= limit, which is
/// lexicographic order on the sorted sequences, empty set first.
void for_each_subset(const std::vector<int>& pool, int limit, std::vector<int>& current,
                     std::size_t from, const std::function<void(const std::vector<int>&)>& visit) {
    visit(current);
    if (static_cast<int>(current.size()) == limit) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        for_each_subset(pool, limit, current, i + 1, visit);
        current.pop_back();
    }
}

int effective_limit(int requested, int cap) {
    if (requested < 0) return cap;
    return std::min(requested, cap);
}

void enumerate_order(int n, int max_k1, int max_k2, const SpecFilter& filter,
                     const std::function<void(const ToeplitzSpec&)>& visit) {
    int lim1 = effective_limit(max_k1, n - 1);
    int lim2 = effective_limit(max_k2, n - 1);
    switch (filter.kind) {
        case FilterKind::Bounded:
            lim1 = std::min(lim1, 2);
            lim2 = std::min(lim2, 2);
            break;
        case FilterKind::Boundary:
            lim1 = std::min(lim1, 2);
            lim2 = std::min(lim2, 2);
            break;
        case FilterKind::Shape:
            lim1 = std::min(lim1, filter.k1);
            lim2 = std::min(lim2, filter.k2);
            break;
        case FilterKind::All: break;
    }

    std::vector<int> universe(static_cast<std::size_t>(n - 1));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<int> alpha_buf, beta_buf, rest;
    for_each_subset(universe, lim1, alpha_buf, 0, [&](const std::vector<int>& alpha) {
        if (filter.kind == FilterKind::Shape && static_cast<int>(alpha.size()) != filter.k1) return;
        rest.clear();
        std::set_difference(universe.begin(), universe.end(), alpha.begin(), alpha.end(),
                            std::back_inserter(rest));
        const std::vector<int> pool = rest;
        for_each_subset(pool, lim2, beta_buf, 0, [&](const std::vector<int>& beta) {
            if (alpha.empty() && beta.empty()) return;
            if (filter.kind == FilterKind::Shape && static_cast<int>(beta.size()) != filter.k2) {
                return;
            }
            const ToeplitzSpec spec = parse_spec(n, alpha, beta);
            if (filter.accepts(spec)) visit(spec);
        });
    });
}

}  // namespace

void enumerate_specs(NRange range, int max_k1, int max_k2, const SpecFilter& filter,
                     const std::function<void(const ToeplitzSpec&)>& visit) {
    check_range(range);
    for (int n = range.lo; n <= range.hi; ++n) enumerate_order(n, max_k1, max_k2, filter, visit);
}

std::vector<ToeplitzSpec> collect_specs(NRange range, int max_k1, int max_k2,
                                        const SpecFilter& filter) {
    std::vector<ToeplitzSpec> out;
    enumerate_specs(range, max_k1, max_k2, filter,
                    [&](const ToeplitzSpec& s) { out.push_back(s); });
    return out;
}

// --- verification -------------------------------------------------------------

namespace {

std::string edges_text(const Graph& g) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) out << ',';
        first = false;
        out << '{' << e.u << ',' << e.v << '}';
    }
    out << '}';
    return out.str();
}

std::string list_text(const std::vector<int>& values) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << '}';
    return out.str();
}

std::string st_name(int n, const std::vector<int>& gamma) {
    std::string s = "ST_" + std::to_string(n) + "⟨";
    for (std::size_t i = 0; i < gamma.size(); ++i) s += (i ? "," : "") + std::to_string(gamma[i]);
    return s + "⟩";
}

std::string st_name_unsized(const std::vector<int>& gamma) {
    std::string s = "ST⟨";
    for (std::size_t i = 0; i < gamma.size(); ++i) s += (i ? "," : "") + std::to_string(gamma[i]);
    return s + "⟩";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

/// Per-order accumulator; merged across orders in increasing n.
struct Tally {
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::vector<Counterexample> counterexamples;
    std::size_t cap = 10;

    template <class Describe>
    void record(bool ok, Describe&& describe) {
        ++checked;
        if (ok) {
            ++passed;
        } else if (counterexamples.size() < cap) {
            counterexamples.push_back(describe());
        }
    }
};

bool only_paths(const StructureSummary& s) {
    return std::all_of(s.components.begin(), s.components.end(), [](const auto& c) {
        return c.kind == ComponentKind::Isolated || c.kind == ComponentKind::Path;
    });
}

bool is_cycle_in(const Graph& g, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 3) return false;
    std::vector<Vertex> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const Vertex a = cycle[k];
        const Vertex b = cycle[(k + 1) % cycle.size()];
        if (a < 1 || b < 1 || a > g.order() || b > g.order() || !g.has_edge(a, b)) return false;
    }
    return true;
}

bool is_directed_cycle_in(const BooleanMatrix& m, const std::vector<Vertex>& cycle) {
    if (cycle.empty()) return false;
    std::vector<Vertex> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (!m(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
    }
    return true;
}

bool is_forest(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.order()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const Edge& e : g.edges()) {
        const int a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

using SweepFn = void (*)(int n, Tally& tally);

// Each sweep handles a single order n.

void sweep_edge_condition(int n, Tally& t) {
    enumerate_order(n, -1, -1, SpecFilter::all(), [&](const ToeplitzSpec& s) {
        const Graph oracle = rowgraph(s);
        const Graph closed = rowgraph_closed_form(s);
        t.record(oracle == closed, [&] {
            return Counterexample{s.to_string(), edges_text(oracle), edges_text(closed)};
        });
    });
}

void sweep_row_col_symmetry(int n, Tally& t) {
    enumerate_order(n, -1, -1, SpecFilter::all(), [&](const ToeplitzSpec& s) {
        const BooleanMatrix m = build_matrix(s);
        Vertex bad = 0;
        for (Vertex l = 1; l <= n && bad == 0; ++l) {
            if (m.row_count(l) != m.col_count(n - l + 1) || row_sum(s, l) != m.row_count(l)) {
                bad = l;
            }
        }
        const bool max_ok = max_row_sum(s) == max_col_sum(s);
        t.record(bad == 0 && max_ok, [&] {
            return Counterexample{s.to_string(),
                                  "row sum l = column sum n-l+1 for every l; equal maxima",
                                  bad ? "mismatch at l=" + std::to_string(bad) : "maxima differ"};
        });
    });
}

void sweep_star_membership(int n, Tally& t) {
    enumerate_order(n, -1, -1, SpecFilter::all(), [&](const ToeplitzSpec& s) {
        const bool predicted = is_row_sum_le2(s);
        const int actual = max_row_sum(s);
        t.record(predicted == (actual <= 2), [&] {
            return Counterexample{s.to_string(), std::string("max row sum <= 2: ") + yes_no(actual <= 2),
                                  std::string("closed form: ") + yes_no(predicted)};
        });
    });
}

void sweep_triangle_char(int n, Tally& t) {
    enumerate_order(n, 2, 2, SpecFilter::shape(2, 2), [&](const ToeplitzSpec& s) {
        if (s.alpha()[0] + s.beta()[1] < n || s.alpha()[1] + s.beta()[0] < n) return;
        const Graph g = rowgraph(s);
        const auto prediction = triangle_predicate(s);
        const auto actual = has_triangle(g);
        bool ok = prediction.has_triangle == actual.has_value();
        if (ok && prediction.witness) {
            const auto& w = *prediction.witness;
            ok = w[0] >= 1 && w[2] <= n && g.has_edge(w[0], w[1]) && g.has_edge(w[1], w[2]) &&
                 g.has_edge(w[0], w[2]);
        }
        t.record(ok, [&] {
            std::string observed = std::string("predicted ") + yes_no(prediction.has_triangle);
            if (prediction.condition) observed += " via (" + std::string(to_string(*prediction.condition)) + ")";
            if (prediction.witness) {
                const auto& w = *prediction.witness;
                observed += " witness {" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                            std::to_string(w[2]) + "}";
            }
            return Counterexample{s.to_string(), std::string("oracle triangle: ") + yes_no(actual.has_value()),
                                  observed};
        });
    });
}

void sweep_scarcity(int n, Tally& t) {
    enumerate_order(n, -1, -1, SpecFilter::all(), [&](const ToeplitzSpec& s) {
        const auto summary = components_classify(rowgraph(s));
        if (!summary.triangle_free) return;
        const int max_row = max_row_sum(s);
        t.record(max_row <= 2 && scarcity_check(summary), [&] {
            return Counterexample{s.to_string(),
                                  "max row sum <= 2, <= 2 cycle lengths, <= 6 path orders",
                                  "max row sum " + std::to_string(max_row) + ", components " +
                                      summary.encoding()};
        });
    });
}

void sweep_small_isolated(int n, Tally& t) {
    if (n > 4) return;
    enumerate_order(n, -1, -1, SpecFilter::all(), [&](const ToeplitzSpec& s) {
        const auto summary = components_classify(rowgraph(s));
        t.record(summary.count(ComponentKind::Isolated) > 0, [&] {
            return Counterexample{s.to_string(), "an isolated vertex", summary.encoding()};
        });
    });
}

void sweep_path_cycle_constructions(int n, Tally& t) {
    const std::string label = "n=" + std::to_string(n);
    if (n <= 4) {
        for (auto make : {&make_path_spec, &make_cycle_spec}) {
            bool too_small = false;
            try {
                (void)make(n);
            } catch (const Error& e) {
                too_small = e.code() == ErrorCode::TooSmall;
            }
            t.record(too_small, [&] { return Counterexample{label, "TooSmall", "constructed"}; });
        }
        return;
    }
    const auto path = components_classify(rowgraph(make_path_spec(n)));
    const std::string want_path = "Path:" + std::to_string(n);
    t.record(path.encoding() == want_path,
             [&] { return Counterexample{label + " path", want_path, path.encoding()}; });
    const auto cycle = components_classify(rowgraph(make_cycle_spec(n)));
    const std::string want_cycle = "Cycle:" + std::to_string(n);
    t.record(cycle.encoding() == want_cycle,
             [&] { return Counterexample{label + " cycle", want_cycle, cycle.encoding()}; });
}

void sweep_bounded_edge_rule(int n, Tally& t) {
    enumerate_order(n, 2, 2, SpecFilter::bounded(), [&](const ToeplitzSpec& s) {
        const Graph oracle = rowgraph(s);
        const Graph bounded = rowgraph_bounded(s);
        const auto summary = components_classify(oracle);
        const bool ok = oracle == bounded && summary.count(ComponentKind::Other) == 0;
        t.record(ok, [&] {
            return Counterexample{s.to_string(), edges_text(oracle) + " with paths and cycles only",
                                  edges_text(bounded) + "; oracle components " + summary.encoding()};
        });
    });
}

void sweep_acyclic_paths(int n, Tally& t) {
    enumerate_order(n, 2, 2, SpecFilter::bounded(), [&](const ToeplitzSpec& s) {
        const BooleanMatrix m = build_matrix(s);
        std::string problem;
        for (int a : s.alpha()) {
            for (int b : s.beta()) {
                if (a + b > n) continue;
                const auto cyc = directed_cycle_witness(s, a, b);
                if (static_cast<int>(cyc.size()) != (a + b) / std::gcd(a, b) ||
                    !is_directed_cycle_in(m, cyc)) {
                    problem = "no directed cycle for offsets (" + std::to_string(a) + "," +
                              std::to_string(b) + ")";
                }
            }
        }
        const bool acyclic = is_digraph_acyclic(s);
        if (problem.empty() && acyclic) {
            if (!digraph_cycle_lengths(s).empty()) problem = "acyclic digraph with a guaranteed cycle";
            const auto summary = components_classify(rowgraph(s));
            if (!only_paths(summary)) problem = "acyclic but components " + summary.encoding();
        }
        t.record(problem.empty(), [&] {
            return Counterexample{s.to_string(), "paths only when acyclic; every guaranteed directed cycle present",
                                  problem};
        });
    });
}

void sweep_kl_cycle(int n, Tally& t) {
    enumerate_order(n, 2, 2, SpecFilter::shape(2, 2), [&](const ToeplitzSpec& s) {
        const auto params = kl_cycle_parameters(s);
        if (params.empty()) return;
        const Graph g = rowgraph(s);
        for (const auto& [k, l] : params) {
            const auto cyc = kl_cycle_witness(s, k, l);
            const bool ok = cyc && static_cast<int>(cyc->size()) == k + l + 1 && is_cycle_in(g, *cyc);
            t.record(ok, [&, k = k, l = l] {
                return Counterexample{s.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l),
                                      "cycle of length " + std::to_string(k + l + 1),
                                      cyc ? "sequence " + list_text(*cyc) + " is not a cycle" : "no start vertex"};
            });
        }
    });
}

void sweep_cycle_component_mn(int n, Tally& t) {
    for (int m = 4; m <= n; ++m) {
        if ((m == 4 && n == 4) || (m == 4 && n == 5) || (m == 6 && n == 8)) continue;
        const ToeplitzSpec s = make_cycle_component_spec(m, n);
        const auto summary = components_classify(rowgraph(s));
        const bool ok = is_row_sum_le2(s) && max_row_sum(s) <= 2 && summary.cycle_lengths == std::vector<int>{m};
        t.record(ok, [&] {
            return Counterexample{"(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") " + s.to_string(),
                                  "exactly one Cycle:" + std::to_string(m) + " in the row-sum-two family",
                                  summary.encoding()};
        });
    }
}

void sweep_mod_decomposition(int n, Tally& t) {
    // Every gamma with gcd exactly d is a nonempty subset of {d, 2d, ...}.
    for (int d = 2; d <= n - 1; ++d) {
        std::vector<int> multiples;
        for (int x = d; x <= n - 1; x += d) multiples.push_back(x);
        std::vector<int> buf;
        for_each_subset(multiples, -1, buf, 0, [&](const std::vector<int>& gamma) {
            if (gamma.empty()) return;
            const int g = std::accumulate(gamma.begin(), gamma.end(), 0,
                                          [](int a, int b) { return std::gcd(a, b); });
            if (g != d) return;
            const auto dec = mod_class_decomposition(n, gamma);
            bool ok = dec.d == d && dec.cross_class_edges == 0 && static_cast<int>(dec.classes.size()) == d;
            std::size_t covered = 0;
            for (const auto& c : dec.classes) {
                ok = ok && c.isomorphism_verified;
                covered += c.vertices.size();
            }
            ok = ok && covered == static_cast<std::size_t>(n);
            t.record(ok, [&] {
                return Counterexample{st_name(n, gamma), "classes isomorphic to " + st_name_unsized(dec.reduced_gamma),
                                      "cross edges " + std::to_string(dec.cross_class_edges)};
            });
        });
    }
}

void sweep_cycle_verdict(int n, Tally& t) {
    auto check = [&](const ToeplitzSpec& s) {
        if (!is_row_sum_le2(s)) return;
        const auto verdict = cycle_verdict_two_one(s);
        const auto summary = components_classify(rowgraph(s));
        bool ok = verdict.exists == !summary.cycle_lengths.empty();
        if (ok && verdict.exists) {
            // Several cycle components can occur (e.g. T_9⟨1,4;5⟩); all share the length.
            ok = std::all_of(summary.cycle_lengths.begin(), summary.cycle_lengths.end(),
                             [&](int len) { return len == *verdict.predicted_length; });
        }
        t.record(ok, [&] {
            return Counterexample{s.to_string(), std::string("oracle components ") + summary.encoding(),
                                  std::string("verdict exists=") + yes_no(verdict.exists) + " d=" +
                                      std::to_string(verdict.d) + " r=" + std::to_string(verdict.r) +
                                      (verdict.predicted_length
                                           ? " length=" + std::to_string(*verdict.predicted_length)
                                           : std::string())};
        });
    };
    enumerate_order(n, 2, 1, SpecFilter::shape(2, 1), check);
    enumerate_order(n, 1, 2, SpecFilter::shape(1, 2), check);
}

void sweep_envelope_bound(int n, Tally& t) {
    enumerate_order(n, -1, -1, SpecFilter::all(), [&](const ToeplitzSpec& s) {
        const Graph g = rowgraph(s);
        const auto gamma = gamma_envelope(s);
        t.record(g.is_subgraph_of(symmetric_toeplitz_graph(n, gamma)), [&] {
            return Counterexample{s.to_string(), "row graph inside " + st_name(n, gamma), edges_text(g)};
        });
    });
    std::vector<int> universe(static_cast<std::size_t>(n - 1));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<int> buf;
    for_each_subset(universe, -1, buf, 0, [&](const std::vector<int>& gamma) {
        const long long ones = symmetric_ones_count(n, gamma);
        const long long edges = static_cast<long long>(symmetric_toeplitz_graph(n, gamma).edge_count());
        t.record(ones == 2 * edges, [&] {
            return Counterexample{st_name(n, gamma), "2 x edges = " + std::to_string(2 * edges),
                                  "ones count " + std::to_string(ones)};
        });
    });
}

void sweep_boundary_exact(int n, Tally& t) {
    enumerate_order(n, 2, 2, SpecFilter::boundary(), [&](const ToeplitzSpec& s) {
        if (2 * (s.alpha()[0] + s.beta()[0]) == n) return;
        const auto prediction = boundary_family_structure(s);
        const Graph g = rowgraph(s);
        const Graph envelope = symmetric_toeplitz_graph(n, prediction.gamma);
        t.record(g == envelope, [&] {
            return Counterexample{s.to_string(), edges_text(envelope), edges_text(g)};
        });
    });
}

void sweep_d_cycles(int n, Tally& t) {
    enumerate_order(n, 2, 2, SpecFilter::boundary(), [&](const ToeplitzSpec& s) {
        if (2 * (s.alpha()[0] + s.beta()[0]) == n) return;
        const auto prediction = boundary_family_structure(s);
        const auto summary = components_classify(rowgraph(s));
        const std::vector<int> want(static_cast<std::size_t>(prediction.cycle_count), prediction.cycle_length);
        t.record(summary.cycle_lengths == want && summary.components.size() == want.size(), [&] {
            return Counterexample{s.to_string(),
                                  std::to_string(prediction.cycle_count) + " x Cycle:" +
                                      std::to_string(prediction.cycle_length),
                                  summary.encoding()};
        });
    });
}

void check_single_cycle(const ToeplitzSpec& s, Tally& t) {
    const auto summary = components_classify(rowgraph(s));
    const bool one_cycle = summary.components.size() == 1 &&
                           summary.components[0].kind == ComponentKind::Cycle;
    const bool predicted = is_single_cycle(s);
    t.record(predicted == one_cycle, [&] {
        return Counterexample{s.to_string(), std::string("one Cycle:n component: ") + yes_no(one_cycle),
                              std::string("predicted ") + yes_no(predicted)};
    });
}

void sweep_symmetric_acyclic(int n, Tally& t) {
    for (int u1 = 1; u1 <= n - 1; ++u1) {
        for (int u2 = u1 + 1; u2 <= n - 1; ++u2) {
            const int g = std::gcd(u1, u2);
            const std::string name = st_name(n, {u1, u2});
            if (u1 + u2 > n) {
                if (g != 1) continue;
                t.record(is_forest(symmetric_toeplitz_graph(n, {u1, u2})),
                         [&] { return Counterexample{name, "acyclic", "contains a cycle"}; });
            } else {
                const Graph st = symmetric_toeplitz_graph(n, {u1, u2});
                const auto cyc = symmetric_cycle_witness(n, u1, u2);
                const int want = (u1 + u2) / g;
                t.record(static_cast<int>(cyc.size()) == want && is_cycle_in(st, cyc), [&] {
                    return Counterexample{name, "cycle of length " + std::to_string(want), list_text(cyc)};
                });
            }
        }
    }
}

struct TheoremEntry {
    std::string_view id;
    std::string_view domain;
    bool all_specs;  // sweeps every spec of each order
    SweepFn sweep;
};

// single_cycle is special-cased in verify() (exhaustive up to a cutoff).
const std::vector<TheoremEntry>& entries() {
    static const std::vector<TheoremEntry> table = {
        {"edge_condition", "every spec; closed-form adjacency vs column-intersection oracle", true,
         &sweep_edge_condition},
        {"row_col_symmetry", "every spec; row sum l vs column sum n-l+1, max row vs max column", true,
         &sweep_row_col_symmetry},
        {"star_membership", "every spec; closed-form row-sum-two test vs max row sum", true,
         &sweep_star_membership},
        {"triangle_char", "|alpha|=|beta|=2 with i1+j2>=n, i2+j1>=n; conditions (i)-(v) vs oracle, witnesses checked",
         false, &sweep_triangle_char},
        {"scarcity", "every spec with triangle-free row graph; max row sum <= 2, <= 2 cycle lengths, <= 6 path orders",
         true, &sweep_scarcity},
        {"small_isolated", "every spec with n <= 4; row graph has an isolated vertex", true,
         &sweep_small_isolated},
        {"path_cycle_constructions", "each order; T_n<1,2;n-2> is Path:n and T_n<1,2;n-2,n-1> is Cycle:n (n >= 5), TooSmall below",
         false, &sweep_path_cycle_constructions},
        {"bounded_edge_rule", "row-sum-two specs; linear edge rule vs oracle, paths and cycles only", false,
         &sweep_bounded_edge_rule},
        {"acyclic_paths", "row-sum-two specs; guaranteed directed cycles exist, acyclic => path components only",
         false, &sweep_acyclic_paths},
        {"kl_cycle", "|alpha|=|beta|=2 and every admissible (k,l); witness is a (k+l+1)-cycle of the row graph",
         false, &sweep_kl_cycle},
        {"cycle_component_mn", "4 <= m <= n except (4,4),(4,5),(6,8); exactly one cycle component, of length m",
         false, &sweep_cycle_component_mn},
        {"mod_decomposition", "every gamma in [1,n-1] with gcd >= 2; residue classes isomorphic to ST_ceil(n/d)<gamma/d>",
         false, &sweep_mod_decomposition},
        {"cycle_verdict", "row-sum-two specs of shape <i1,i2;j1> and <i1;j1,j2>; verdict vs oracle cycle existence, every cycle of length ceil(n/d)",
         false, &sweep_cycle_verdict},
        {"envelope_bound", "every spec (row graph inside ST_n<gamma(alpha,beta)>) and every gamma (ones count)", true,
         &sweep_envelope_bound},
        {"boundary_exact", "i1+j2 = i2+j1 = n, 2(i1+j1) != n; row graph equals ST_n<i1+j1, n-(i1+j1)>", false,
         &sweep_boundary_exact},
        {"single_cycle", "", false, nullptr},
        {"d_cycles", "i1+j2 = i2+j1 = n, 2(i1+j1) != n; exactly d = gcd(n, i1+j1) cycles of length n/d", false,
         &sweep_d_cycles},
        {"symmetric_acyclic", "1 <= u1 < u2 <= n-1; gcd 1 and u1+u2 > n => acyclic, u1+u2 <= n => cycle of length (u1+u2)/gcd",
         false, &sweep_symmetric_acyclic},
    };
    return table;
}

}  // namespace

const std::vector<std::string_view>& theorem_registry() {
    static const std::vector<std::string_view> ids = [] {
        std::vector<std::string_view> out;
        for (const auto& e : entries()) out.push_back(e.id);
        return out;
    }();
    return ids;
}

TheoremReport verify(std::string_view theorem_id, NRange range, const VerifyOptions& options) {
    const auto& table = entries();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const TheoremEntry& e) { return e.id == theorem_id; });
    if (it == table.end()) {
        throw Error(ErrorCode::UnknownTheorem, "unknown theorem id '" + std::string(theorem_id) + "'");
    }
    check_range(range);
    if (it->all_specs && range.hi > options.all_specs_max_n) {
        throw Error(ErrorCode::InvalidRange,
                    std::string(theorem_id) + " sweeps every spec; order " + std::to_string(range.hi) +
                        " exceeds the limit " + std::to_string(options.all_specs_max_n));
    }
    const std::size_t cap = std::max<std::size_t>(options.counterexample_cap, 1);

    TheoremReport report;
    report.theorem_id = std::string(theorem_id);
    report.n_range = range;
    report.cap = cap;

    // Orders above this cutoff only sweep the row-sum-two specs; every other
    // spec has a column with three ones, hence a triangle, so it is neither a
    // single cycle nor a boundary spec.
    const int single_cycle_cutoff = std::min(options.all_specs_max_n, 12);
    SweepFn sweep = it->sweep;
    if (theorem_id == "single_cycle") {
        report.domain = "every spec for n <= " + std::to_string(single_cycle_cutoff) +
                        ", row-sum-two specs above (the rest contain a triangle); predicate vs one Cycle:n component";
    } else {
        report.domain = std::string(it->domain);
    }

    auto run_order = [&](int n) {
        Tally t;
        t.cap = cap;
        if (sweep) {
            sweep(n, t);
        } else {
            const SpecFilter filter = n <= single_cycle_cutoff ? SpecFilter::all() : SpecFilter::bounded();
            enumerate_order(n, -1, -1, filter, [&](const ToeplitzSpec& s) { check_single_cycle(s, t); });
        }
        return t;
    };

    std::vector<Tally> per_order;
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (int n = range.lo; n <= range.hi; ++n) per_order.push_back(run_order(n));
    } else {
        for (int base = range.lo; base <= range.hi; base += threads) {
            std::vector<std::future<Tally>> batch;
            for (int n = base; n < base + threads && n <= range.hi; ++n) {
                batch.push_back(std::async(std::launch::async, run_order, n));
            }
            for (auto& f : batch) per_order.push_back(f.get());
        }
    }

    for (auto& t : per_order) {
        report.checked += t.checked;
        report.passed += t.passed;
        for (auto& c : t.counterexamples) {
            if (report.counterexamples.size() < cap) report.counterexamples.push_back(std::move(c));
        }
    }
    return report;
}

// --- catalog --------------------------------------------------------------------

CatalogRow catalog_row(const ToeplitzSpec& spec) {
    const auto summary = components_classify(rowgraph(spec));
    return CatalogRow{spec, is_row_sum_le2(spec), summary.triangle_free, summary.encoding(),
                      gamma_envelope(spec)};
}

void catalog(NRange range, const SpecFilter& filter,
             const std::function<void(const CatalogRow&)>& visit) {
    enumerate_specs(range, -1, -1, filter, [&](const ToeplitzSpec& s) { visit(catalog_row(s)); });
}

}  // namespace trg
