#include "cli.hpp"

#include <CLI11.hpp>

#include <numeric>
#include <optional>
#include <ostream>

#include "trg/core.hpp"
#include "trg/explorer.hpp"
#include "trg/io.hpp"
#include "trg/rowgraph.hpp"
#include "trg/structure.hpp"

namespace trg::cli {

namespace {

using io::Json;

struct SpecArgs {
    int n = 0;
    std::string alpha;
    std::string beta;

    void attach(CLI::App& cmd) {
        cmd.add_option("-n,--order", n, "matrix order n")->required();
        cmd.add_option("-a,--alpha", alpha, "subdiagonal offsets, comma separated (may be empty)");
        cmd.add_option("-b,--beta", beta, "superdiagonal offsets, comma separated (may be empty)");
    }

    ToeplitzSpec spec() const { return parse_spec(n, io::parse_int_list(alpha), io::parse_int_list(beta)); }
};

struct RangeArgs {
    int lo = 2;
    int hi = 10;

    void attach(CLI::App& cmd) {
        cmd.add_option("--min-n", lo, "smallest order swept")->capture_default_str();
        cmd.add_option("--max-n", hi, "largest order swept")->capture_default_str();
    }
};

Json optional_vertices(const std::optional<std::vector<Vertex>>& v) {
    return v ? Json(*v) : Json(nullptr);
}

/// Human form of a flat JSON object: one "key: value" line per member.
void print_object(const Json& j, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& item : j.items()) width = std::max(width, item.key().size());
    for (const auto& item : j.items()) {
        out << item.key() << std::string(width - item.key().size(), ' ') << " : "
            << (item.value().is_string() ? item.value().get<std::string>() : item.value().dump()) << '\n';
    }
}

Json triangle_json(const ToeplitzSpec& s) {
    const auto p = triangle_predicate(s);
    Json j;
    j["spec"] = s.to_string();
    j["has_triangle"] = p.has_triangle;
    j["condition"] = p.condition ? Json(std::string(to_string(*p.condition))) : Json(nullptr);
    j["witness"] = p.witness ? Json(*p.witness) : Json(nullptr);
    j["swapped"] = p.swapped;
    return j;
}

Json verdict_json(const ToeplitzSpec& s) {
    const auto v = cycle_verdict_two_one(s);
    Json j;
    j["spec"] = s.to_string();
    j["exists"] = v.exists;
    j["predicted_length"] = v.predicted_length ? Json(*v.predicted_length) : Json(nullptr);
    j["d"] = v.d;
    j["r"] = v.r;
    j["orientation"] = v.orientation == Orientation::Direct ? "direct" : "mirrored";
    return j;
}

Json boundary_json(const ToeplitzSpec& s) {
    const auto b = boundary_family_structure(s);
    Json j;
    j["spec"] = s.to_string();
    j["gamma"] = b.gamma;
    j["d"] = b.d;
    j["cycle_count"] = b.cycle_count;
    j["cycle_length"] = b.cycle_length;
    return j;
}

Json acyclic_json(const ToeplitzSpec& s) {
    Json j;
    j["spec"] = s.to_string();
    j["acyclic"] = is_digraph_acyclic(s);
    const auto lengths = digraph_cycle_lengths(s);
    j["guaranteed_cycle_lengths"] = std::vector<int>(lengths.begin(), lengths.end());
    Json witnesses = Json::array();
    for (int i : s.alpha())
        for (int jb : s.beta())
            if (i + jb <= s.n()) witnesses.push_back(directed_cycle_witness(s, i, jb));
    j["directed_cycles"] = std::move(witnesses);
    return j;
}

Json mod_json(int n, const std::vector<int>& gamma) {
    const auto dec = mod_class_decomposition(n, gamma);
    Json j;
    j["d"] = dec.d;
    j["r"] = dec.r;
    j["reduced_gamma"] = dec.reduced_gamma;
    j["cross_class_edges"] = dec.cross_class_edges;
    Json classes = Json::array();
    for (const auto& c : dec.classes) {
        classes.push_back(Json{{"residue", c.residue},
                               {"vertices", c.vertices},
                               {"target_order", c.target_order},
                               {"image", c.image},
                               {"isomorphism_verified", c.isomorphism_verified}});
    }
    j["classes"] = std::move(classes);
    return j;
}

void emit(const Json& j, bool json, std::ostream& out) {
    if (json) {
        out << j.dump() << '\n';
    } else {
        print_object(j, out);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"(0,1)-Toeplitz matrices and their row graphs", "trg"};
    app.require_subcommand(1, 1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.set_help_all_flag("--help-all");

    // build
    SpecArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "print the matrix as n lines of 0/1");
    build_args.attach(*build_cmd);

    // rowgraph
    SpecArgs rg_args;
    std::string engine = "all";
    auto* rg_cmd = app.add_subcommand("rowgraph", "print the row graph edges");
    rg_args.attach(*rg_cmd);
    rg_cmd->add_option("--engine", engine, "oracle, closed, bounded, or all (cross-check)")
        ->check(CLI::IsMember({"oracle", "closed", "bounded", "all"}))
        ->capture_default_str();

    // classify
    SpecArgs cl_args;
    auto* cl_cmd = app.add_subcommand("classify", "classify row graph components");
    cl_args.attach(*cl_cmd);

    // predict
    static const std::vector<std::string> predicates = {
        "triangle",  "shift",         "kl_cycle",    "cycle_verdict", "boundary",
        "single_cycle", "connected_triangle_free", "acyclic", "row_sum_le2", "envelope",
        "scarcity",  "mod_decomposition", "symmetric_cycle"};
    std::string predicate;
    int pred_n = 0;
    std::string pred_alpha, pred_beta, walk_text, gamma_text;
    bool closed = false;
    int k = 0, l = 0;
    auto* pr_cmd = app.add_subcommand("predict", "run a structure predicate");
    pr_cmd->add_option("name", predicate, "predicate name")->required()->check(CLI::IsMember(predicates));
    pr_cmd->add_option("-n,--order", pred_n, "matrix order n")->required();
    pr_cmd->add_option("-a,--alpha", pred_alpha, "subdiagonal offsets");
    pr_cmd->add_option("-b,--beta", pred_beta, "superdiagonal offsets");
    pr_cmd->add_option("--walk", walk_text, "vertex sequence for shift");
    pr_cmd->add_flag("--closed", closed, "treat --walk as a cycle");
    pr_cmd->add_option("-k", k, "k for kl_cycle");
    pr_cmd->add_option("-l", l, "l for kl_cycle");
    pr_cmd->add_option("--gamma", gamma_text, "offset set for mod_decomposition / symmetric_cycle");

    // construct
    std::string kind;
    int cons_n = 0, cons_m = 0;
    auto* co_cmd = app.add_subcommand("construct", "build a path, cycle, or cycle-component spec");
    co_cmd->add_option("kind", kind, "path, cycle, or component")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "component"}));
    co_cmd->add_option("-n,--order", cons_n, "matrix order n")->required();
    co_cmd->add_option("-m", cons_m, "cycle length for component");

    // verify
    std::string theorem;
    RangeArgs ver_range;
    VerifyOptions options;
    auto* ve_cmd = app.add_subcommand("verify", "sweep a registry statement against the oracle");
    ve_cmd->add_option("theorem", theorem, "registry id or 'all'")->required();
    ver_range.attach(*ve_cmd);
    ve_cmd->add_option("--cap", options.counterexample_cap, "counterexamples kept per report")
        ->capture_default_str();
    ve_cmd->add_option("--threads", options.threads, "worker threads")->capture_default_str();
    ve_cmd->add_option("--all-specs-max-n", options.all_specs_max_n,
                       "largest order for sweeps over every spec")
        ->capture_default_str();

    // catalog
    RangeArgs cat_range;
    std::string filter_name = "all";
    int cat_k1 = 2, cat_k2 = 2;
    auto* ca_cmd = app.add_subcommand("catalog", "CSV of every spec in range");
    cat_range.attach(*ca_cmd);
    ca_cmd->add_option("--filter", filter_name, "all, bounded, boundary, or shape")
        ->check(CLI::IsMember({"all", "bounded", "boundary", "shape"}))
        ->capture_default_str();
    ca_cmd->add_option("--k1", cat_k1, "|alpha| for --filter shape");
    ca_cmd->add_option("--k2", cat_k2, "|beta| for --filter shape");

    // export
    std::string export_kind;
    SpecArgs ex_args;
    auto* ex_cmd = app.add_subcommand("export", "row graph as DOT or JSON");
    ex_cmd->add_option("kind", export_kind, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));
    ex_args.attach(*ex_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    const bool json = format == "json";
    try {
        if (*build_cmd) {
            const auto s = build_args.spec();
            const auto m = build_matrix(s);
            if (json) {
                Json j = io::spec_to_json(s);
                std::vector<std::string> rows;
                std::string text = m.to_text();
                for (std::size_t pos = 0; pos < text.size(); pos += static_cast<std::size_t>(s.n()) + 1) {
                    rows.push_back(text.substr(pos, static_cast<std::size_t>(s.n())));
                }
                j["matrix"] = rows;
                out << j.dump() << '\n';
            } else {
                out << m.to_text();
            }
        } else if (*rg_cmd) {
            const auto s = rg_args.spec();
            std::optional<Graph> g;
            if (engine == "oracle") {
                g = rowgraph_oracle(build_matrix(s));
            } else if (engine == "closed") {
                g = rowgraph_closed_form(s);
            } else if (engine == "bounded") {
                g = rowgraph_bounded(s);
            } else {
                const Graph oracle = rowgraph_oracle(build_matrix(s));
                if (!(rowgraph_closed_form(s) == oracle) ||
                    (is_row_sum_le2(s) && !(rowgraph_bounded(s) == oracle))) {
                    err << "error: row graph engines disagree for " << s.to_string() << '\n';
                    return kDomainError;
                }
                g = oracle;
            }
            out << (json ? io::graph_to_json(*g).dump() + "\n" : io::edges_to_text(*g));
        } else if (*cl_cmd) {
            const auto summary = components_classify(rowgraph(cl_args.spec()));
            out << (json ? io::summary_to_json(summary).dump() : summary.encoding()) << '\n';
        } else if (*pr_cmd) {
            auto spec = [&] {
                return parse_spec(pred_n, io::parse_int_list(pred_alpha), io::parse_int_list(pred_beta));
            };
            Json j;
            if (predicate == "triangle") {
                j = triangle_json(spec());
            } else if (predicate == "shift") {
                const auto s = spec();
                const auto r = shift_walk(s, io::parse_int_list(walk_text), closed);
                j["spec"] = s.to_string();
                j["walk"] = r ? Json(r->walk) : Json(nullptr);
                j["component_guaranteed"] = r ? r->component_guaranteed : false;
            } else if (predicate == "kl_cycle") {
                const auto s = spec();
                j["spec"] = s.to_string();
                if (pr_cmd->count("-k") || pr_cmd->count("-l")) {
                    j["k"] = k;
                    j["l"] = l;
                    j["cycle"] = optional_vertices(kl_cycle_witness(s, k, l));
                } else {
                    Json all = Json::array();
                    for (const auto& [pk, pl] : kl_cycle_parameters(s)) {
                        all.push_back(Json{{"k", pk}, {"l", pl}, {"cycle", optional_vertices(kl_cycle_witness(s, pk, pl))}});
                    }
                    j["cycles"] = std::move(all);
                }
            } else if (predicate == "cycle_verdict") {
                j = verdict_json(spec());
            } else if (predicate == "boundary") {
                j = boundary_json(spec());
            } else if (predicate == "single_cycle") {
                const auto s = spec();
                j["spec"] = s.to_string();
                j["single_cycle"] = is_single_cycle(s);
            } else if (predicate == "connected_triangle_free") {
                const auto s = spec();
                j["spec"] = s.to_string();
                j["connected_triangle_free"] = connected_triangle_free_check(s);
            } else if (predicate == "acyclic") {
                j = acyclic_json(spec());
            } else if (predicate == "row_sum_le2") {
                const auto s = spec();
                j["spec"] = s.to_string();
                j["in_T_le2"] = is_row_sum_le2(s);
                j["max_row_sum"] = max_row_sum(s);
            } else if (predicate == "envelope") {
                const auto s = spec();
                const auto gamma = gamma_envelope(s);
                j["spec"] = s.to_string();
                j["gamma"] = gamma;
                j["contains_row_graph"] = rowgraph(s).is_subgraph_of(symmetric_toeplitz_graph(s.n(), gamma));
                j["ones_count"] = symmetric_ones_count(s.n(), gamma);
            } else if (predicate == "scarcity") {
                const auto s = spec();
                const auto summary = components_classify(rowgraph(s));
                j["spec"] = s.to_string();
                j["triangle_free"] = summary.triangle_free;
                j["cycle_lengths"] = summary.cycle_lengths;
                j["path_orders"] = summary.path_orders;
                j["passes"] = scarcity_check(summary);
            } else if (predicate == "mod_decomposition") {
                j = mod_json(pred_n, io::parse_int_list(gamma_text));
            } else if (predicate == "symmetric_cycle") {
                const auto gamma = io::parse_int_list(gamma_text);
                if (gamma.size() != 2) {
                    err << "error: symmetric_cycle needs --gamma u1,u2\n";
                    return kUsageError;
                }
                j["cycle"] = symmetric_cycle_witness(pred_n, gamma[0], gamma[1]);
            }
            emit(j, json, out);
        } else if (*co_cmd) {
            std::optional<ToeplitzSpec> s;
            if (kind == "path") {
                s = make_path_spec(cons_n);
            } else if (kind == "cycle") {
                s = make_cycle_spec(cons_n);
            } else {
                if (!co_cmd->count("-m")) {
                    err << "error: construct component needs -m\n";
                    return kUsageError;
                }
                s = make_cycle_component_spec(cons_m, cons_n);
            }
            out << (json ? io::spec_to_json(*s).dump() : s->to_string()) << '\n';
        } else if (*ve_cmd) {
            std::vector<std::string_view> ids;
            if (theorem == "all") {
                ids = theorem_registry();
            } else {
                ids.push_back(theorem);
            }
            bool all_ok = true;
            Json reports = Json::array();
            for (auto id : ids) {
                const auto report = verify(id, {ver_range.lo, ver_range.hi}, options);
                all_ok = all_ok && report.ok();
                if (json) {
                    reports.push_back(io::report_to_json(report));
                } else {
                    out << io::report_to_text(report) << '\n';
                }
            }
            if (json) out << (ids.size() == 1 ? reports[0] : reports).dump() << '\n';
            return all_ok ? kOk : kCounterexamples;
        } else if (*ca_cmd) {
            SpecFilter filter = SpecFilter::all();
            if (filter_name == "bounded") filter = SpecFilter::bounded();
            if (filter_name == "boundary") filter = SpecFilter::boundary();
            if (filter_name == "shape") filter = SpecFilter::shape(cat_k1, cat_k2);
            out << io::catalog_csv_header() << '\n';
            catalog({cat_range.lo, cat_range.hi}, filter,
                    [&](const CatalogRow& row) { out << io::catalog_csv_line(row) << '\n'; });
        } else if (*ex_cmd) {
            const auto g = rowgraph(ex_args.spec());
            out << (export_kind == "dot" ? io::graph_to_dot(g) : io::graph_to_json(g).dump() + "\n");
        }
    } catch (const trg::Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

}  // namespace trg::cli
