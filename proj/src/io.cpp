#include "trg/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace trg::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<int> int_array(const Json& json, const char* key) {
    const auto it = json.find(key);
    if (it == json.end()) parse_error(std::string("missing field '") + key + "'");
    if (!it->is_array()) parse_error(std::string("field '") + key + "' must be an array");
    std::vector<int> out;
    for (const auto& v : *it) {
        if (!v.is_number_integer()) parse_error(std::string("field '") + key + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

int int_field(const Json& json, const char* key) {
    const auto it = json.find(key);
    if (it == json.end()) parse_error(std::string("missing field '") + key + "'");
    if (!it->is_number_integer()) parse_error(std::string("field '") + key + "' must be an integer");
    return it->get<int>();
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

}  // namespace

Json spec_to_json(const ToeplitzSpec& spec) {
    Json j;
    j["n"] = spec.n();
    j["alpha"] = spec.alpha();
    j["beta"] = spec.beta();
    return j;
}

ToeplitzSpec spec_from_json(const Json& json) {
    if (!json.is_object()) parse_error("spec JSON must be an object");
    return parse_spec(int_field(json, "n"), int_array(json, "alpha"), int_array(json, "beta"));
}

ToeplitzSpec spec_from_json_text(const std::string& text) { return spec_from_json(parse_text(text)); }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (trim(text).empty()) return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::string t = trim(item);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
            parse_error("'" + text + "' is not a comma-separated list of integers");
        }
        out.push_back(value);
    }
    if (text.back() == ',') parse_error("'" + text + "' has a trailing comma");
    return out;
}

std::string join_ints(const std::vector<int>& values, const char* separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += separator;
        out += std::to_string(values[i]);
    }
    return out;
}

Json graph_to_json(const Graph& graph) {
    Json j;
    j["n"] = graph.order();
    Json edges = Json::array();
    for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& json) {
    if (!json.is_object()) parse_error("graph JSON must be an object");
    const int n = int_field(json, "n");
    if (n < 1) parse_error("graph order must be positive");
    const auto it = json.find("edges");
    if (it == json.end() || !it->is_array()) parse_error("graph JSON needs an 'edges' array");
    std::vector<Edge> edges;
    for (const auto& pair : *it) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            parse_error("each edge must be a pair of integers");
        }
        edges.push_back(Edge{pair[0].get<int>(), pair[1].get<int>()});
    }
    return Graph(n, std::move(edges));
}

Graph graph_from_json_text(const std::string& text) { return graph_from_json(parse_text(text)); }

std::string graph_to_dot(const Graph& graph, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 1; v <= graph.order(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
    for (const Edge& e : graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string edges_to_text(const Graph& graph) {
    std::ostringstream out;
    for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Json summary_to_json(const StructureSummary& summary) {
    Json j;
    j["encoding"] = summary.encoding();
    j["triangle_free"] = summary.triangle_free;
    j["cycle_lengths"] = summary.cycle_lengths;
    j["path_orders"] = summary.path_orders;
    Json comps = Json::array();
    for (const auto& c : summary.components) {
        Json cj;
        cj["kind"] = std::string(to_string(c.kind));
        cj["size"] = c.size;
        cj["vertices"] = c.vertices;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    return j;
}

std::string summary_to_text(const StructureSummary& summary) {
    std::ostringstream out;
    out << summary.encoding() << '\n';
    out << "triangle_free: " << (summary.triangle_free ? "true" : "false") << '\n';
    for (const auto& c : summary.components) {
        out << "  " << std::left << std::setw(8) << to_string(c.kind) << ' ' << std::setw(3) << c.size
            << " {" << join_ints(c.vertices) << "}\n";
    }
    return out.str();
}

Json report_to_json(const TheoremReport& report) {
    Json j;
    j["registry_version"] = report.registry_version;
    j["theorem_id"] = report.theorem_id;
    j["n_range"] = {report.n_range.lo, report.n_range.hi};
    j["domain"] = report.domain;
    j["checked"] = report.checked;
    j["passed"] = report.passed;
    j["counterexample_cap"] = report.cap;
    Json ces = Json::array();
    for (const auto& c : report.counterexamples) {
        ces.push_back(Json{{"subject", c.subject}, {"expected", c.expected}, {"observed", c.observed}});
    }
    j["counterexamples"] = std::move(ces);
    return j;
}

std::string report_to_text(const TheoremReport& report) {
    std::ostringstream out;
    auto line = [&](const char* key, const std::string& value) {
        out << std::left << std::setw(16) << key << ": " << value << '\n';
    };
    line("theorem", report.theorem_id);
    line("registry", std::to_string(report.registry_version));
    line("n range", std::to_string(report.n_range.lo) + ".." + std::to_string(report.n_range.hi));
    line("domain", report.domain);
    line("checked", std::to_string(report.checked));
    line("passed", std::to_string(report.passed));
    line("status", report.ok() ? "PASS" : "FAIL");
    for (const auto& c : report.counterexamples) {
        out << "  counterexample " << c.subject << "\n    expected: " << c.expected
            << "\n    observed: " << c.observed << '\n';
    }
    return out.str();
}

std::string catalog_csv_header() { return "n,alpha,beta,in_T_le2,triangle_free,components,gamma"; }

std::string catalog_csv_line(const CatalogRow& row) {
    auto quoted = [](const std::vector<int>& v) { return "\"" + join_ints(v) + "\""; };
    std::ostringstream out;
    out << row.spec.n() << ',' << quoted(row.spec.alpha()) << ',' << quoted(row.spec.beta()) << ','
        << (row.in_t_le2 ? "true" : "false") << ',' << (row.triangle_free ? "true" : "false") << ','
        << row.components << ',' << quoted(row.gamma);
    return out.str();
}

}  // namespace trg::io
