#include "usn/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "usn/constructions.hpp"
#include "usn/dynamic_ops.hpp"
#include "usn/graph.hpp"
#include "usn/io.hpp"
#include "usn/labeling.hpp"
#include "usn/solver.hpp"

namespace usn {

namespace {

std::optional<GraphFormat> parse_format(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "edge_list") return GraphFormat::edge_list;
    if (name == "graph6") return GraphFormat::graph6;
    throw std::invalid_argument("unknown --format: " + name + " (edge_list or graph6)");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

std::string format_bound(double bound) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", bound);
    return buf;
}

int ceil_log2(long long n) {
    int k = 0;
    while ((1LL << k) < n) ++k;
    return k;
}

// --- construct ---------------------------------------------------------

struct ConstructArgs {
    std::string family;
    int n = 0;
    int s = 0;
    int t = 0;
    bool uniform = false;
    std::string out_path;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    Family family = family_from_name(a.family);
    Labeling labeling;
    Provenance prov;
    prov["family"] = a.family;
    prov["base"] = "-";
    prov["rounds"] = "0";
    auto fill_build = [&](const PathBuild& b) {
        labeling = b.labeling;
        prov["base"] = b.info.base_id;
        prov["rounds"] = std::to_string(b.info.rounds);
    };
    switch (family) {
        case Family::complete:
            if (a.uniform) throw std::invalid_argument("--uniform is not defined for complete");
            labeling = label_complete(a.n);
            prov["params"] = std::to_string(a.n);
            break;
        case Family::independent:
            if (a.uniform)
                throw std::invalid_argument("--uniform is not defined for independent");
            labeling = label_independent_set(a.n);
            prov["params"] = std::to_string(a.n);
            break;
        case Family::complete_bipartite: {
            if (a.uniform)
                throw std::invalid_argument("--uniform is not defined for complete_bipartite");
            int s = a.s ? a.s : a.n;
            int t = a.t ? a.t : a.n;
            if (s <= 0 || t <= 0)
                throw std::invalid_argument("complete_bipartite needs --s and --t (or --n)");
            labeling = label_complete_bipartite(s, t);
            prov["params"] = std::to_string(s) + "," + std::to_string(t);
            break;
        }
        case Family::matching:
            if (a.uniform) throw std::invalid_argument("--uniform is not defined for matching");
            labeling = label_matching(a.n);
            prov["params"] = std::to_string(a.n);
            break;
        case Family::path:
            fill_build(build_path_labeling(a.n, a.uniform));
            prov["params"] = std::to_string(a.n);
            break;
        case Family::cycle:
            fill_build(build_cycle_labeling(a.n, a.uniform));
            prov["params"] = std::to_string(a.n);
            break;
        case Family::wheel: {
            labeling = a.uniform ? label_wheel_uniform(a.n) : label_wheel(a.n);
            PathBuild rim = build_cycle_labeling(a.n - 1, a.uniform);
            prov["base"] = rim.info.base_id;
            prov["rounds"] = std::to_string(rim.info.rounds);
            prov["params"] = std::to_string(a.n);
            break;
        }
        case Family::hypercube:
            labeling = a.uniform ? label_hypercube_uniform(a.n) : label_hypercube(a.n);
            prov["params"] = std::to_string(a.n);
            break;
    }
    if (a.uniform) prov["uniform"] = "true";
    LabelStats st = stats(labeling);
    prov["universe"] = std::to_string(st.universe_size);
    emit(write_labeling(labeling, prov), a.out_path, out);
    return 0;
}

// --- verify -------------------------------------------------------------

int cmd_verify(const std::string& graph_path, const std::string& labels_path,
               const std::string& format, bool as_json, std::ostream& out) {
    Graph g = load_graph_file(graph_path, parse_format(format));
    LabelingFile lf = read_labeling(read_text_file(labels_path));
    VerifyReport report = verify(g, lf.labeling);
    if (as_json) {
        nlohmann::ordered_json j;
        j["valid"] = report.valid;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : report.violations)
            arr.push_back({{"kind", violation_name(v.kind)}, {"u", v.u}, {"v", v.v}});
        j["violations"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else if (report.valid) {
        out << "valid\n";
    } else {
        for (const auto& v : report.violations)
            out << violation_name(v.kind) << " (" << v.u << "," << v.v << ")\n";
    }
    return report.valid ? 0 : 1;
}

// --- exact --------------------------------------------------------------

int cmd_exact(const std::string& graph_path, const std::string& param,
              const std::string& format, std::optional<int> max_universe,
              std::optional<double> budget, const std::string& cert_path, std::ostream& out) {
    Graph g = load_graph_file(graph_path, parse_format(format));
    SolveConfig cfg;
    cfg.max_universe = max_universe;
    if (budget)
        cfg.time_budget_secs = budget;
    else if (const char* env = std::getenv("USN_TIME_BUDGET_SECS"))
        cfg.time_budget_secs = std::atof(env);
    SolveResult r;
    if (param == "usn")
        r = exact_usn(g, cfg);
    else if (param == "iln")
        r = exact_iln(g, cfg);
    else if (param == "uusn") {
        cfg.require_uniform = true;
        r = exact_uusn(g, cfg);
    } else {
        throw std::invalid_argument("--param must be usn, iln, or uusn");
    }
    nlohmann::ordered_json j;
    j["param"] = param;
    j["status"] = solve_status_name(r.status);
    j["value"] = r.value;
    if (r.witness) {
        auto labels = nlohmann::ordered_json::array();
        for (const auto& label : r.witness->labels) labels.push_back(label);
        j["witness"] = std::move(labels);
    } else {
        j["witness"] = nullptr;
    }
    out << j.dump(2) << "\n";
    if (!cert_path.empty()) write_text_file(cert_path, solve_certificate(g, param, cfg, r));
    return r.status == SolveStatus::timeout ? 3 : 0;
}

// --- mutate / label-any --------------------------------------------------

int cmd_mutate(const std::string& graph_path, const std::string& labels_path,
               const std::string& format, bool add_universal, std::vector<int> delete_edge_uv,
               const std::string& out_graph, const std::string& out_labels, std::ostream& out) {
    Graph g = load_graph_file(graph_path, parse_format(format));
    LabelingFile lf = read_labeling(read_text_file(labels_path));
    if (add_universal == !delete_edge_uv.empty())
        throw std::invalid_argument("mutate: give exactly one of --add-universal, --delete-edge");
    GraphLabeling result =
        add_universal
            ? add_universal_vertex(g, lf.labeling)
            : delete_edge(g, lf.labeling, {delete_edge_uv.at(0), delete_edge_uv.at(1)});
    Provenance prov;
    prov["operation"] = add_universal ? "add_universal" : "delete_edge";
    prov["universe"] = std::to_string(stats(result.labeling).universe_size);
    if (!out_graph.empty()) write_text_file(out_graph, write_edge_list(result.graph));
    if (!out_labels.empty()) write_text_file(out_labels, write_labeling(result.labeling, prov));
    if (out_graph.empty() && out_labels.empty()) {
        nlohmann::ordered_json j;
        j["n"] = result.graph.vertex_count();
        auto edges = nlohmann::ordered_json::array();
        for (auto [u, v] : result.graph.edges()) edges.push_back({u, v});
        j["edges"] = std::move(edges);
        auto labels = nlohmann::ordered_json::array();
        for (const auto& label : result.labeling.labels) labels.push_back(label);
        j["labels"] = std::move(labels);
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_label_any(const std::string& graph_path, const std::string& format,
                  const std::string& out_path, std::ostream& out) {
    Graph g = load_graph_file(graph_path, parse_format(format));
    Labeling labeling = label_arbitrary(g);
    Provenance prov;
    prov["operation"] = "label_arbitrary";
    prov["universe"] = std::to_string(stats(labeling).universe_size);
    emit(write_labeling(labeling, prov), out_path, out);
    return 0;
}

// --- bench ---------------------------------------------------------------

// Documented universe ceilings for the bench table: path/cycle/wheel use
// 4.5*log2(max(n,2)); matching the minimal even k with C(k,k/2) >= 2n;
// independent 1+ceil(log2 n); complete n; hypercube 3d plus the universe of
// the path labeling on d+1 vertices.
double bench_bound(Family family, int param) {
    switch (family) {
        case Family::path:
        case Family::cycle:
        case Family::wheel:
            return 4.5 * std::log2(std::max(param, 2));
        case Family::matching:
            return matching_universe_size(param);
        case Family::independent:
            return 1 + ceil_log2(param);
        case Family::complete:
            return param;
        case Family::hypercube:
            return 3.0 * param + static_cast<int>(label_path(param + 1).universe().size());
        case Family::complete_bipartite:
            break;
    }
    throw std::invalid_argument("bench: unsupported family");
}

Labeling bench_labeling(Family family, int param) {
    switch (family) {
        case Family::path: return label_path(param);
        case Family::cycle: return label_cycle(param);
        case Family::wheel: return label_wheel(param);
        case Family::matching: return label_matching(param);
        case Family::independent: return label_independent_set(param);
        case Family::complete: return label_complete(param);
        case Family::hypercube: return label_hypercube(param);
        case Family::complete_bipartite: break;
    }
    throw std::invalid_argument("bench: unsupported family");
}

std::vector<int> bench_grid(Family family, int max_n) {
    std::vector<int> grid;
    if (family == Family::hypercube) {
        for (int d = 1; d <= 8 && (1 << d) <= std::max(max_n, 2); ++d) grid.push_back(d);
        return grid;
    }
    int lo = family == Family::wheel ? 4 : (family == Family::cycle ? 3 : 2);
    for (int n = lo; n <= max_n; n = n < 4 ? n + 1 : n * 2)
        if (grid.empty() || grid.back() != n) grid.push_back(n);
    if (!grid.empty() && grid.back() != max_n && max_n >= lo) grid.push_back(max_n);
    return grid;
}

int cmd_bench(const std::string& families_list, int max_n, const std::string& csv_path,
              std::ostream& out) {
    std::vector<Family> families;
    std::stringstream ss(families_list);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty()) families.push_back(family_from_name(name));
    if (families.empty()) throw std::invalid_argument("bench: --families list is empty");
    std::ostringstream csv;
    csv << "# usn bench v1\n";
    csv << "# bounds: path/cycle/wheel 4.5*log2(max(n,2)); matching min even k with "
           "C(k,k/2)>=2n; independent 1+ceil(log2 n); complete n; hypercube "
           "3d+universe(path(d+1))\n";
    csv << "family,param,universe,max_label,uniform,bound,within_bound\n";
    for (Family family : families) {
        for (int param : bench_grid(family, max_n)) {
            Labeling labeling = bench_labeling(family, param);
            LabelStats st = stats(labeling);
            double bound = bench_bound(family, param);
            bool within = st.universe_size <= bound;
            csv << family_name(family) << "," << param << "," << st.universe_size << ","
                << st.max_label << "," << (st.uniform ? "true" : "false") << ","
                << format_bound(bound) << "," << (within ? "true" : "false") << "\n";
        }
    }
    emit(csv.str(), csv_path, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"disjointness labelings: construct, verify, solve, mutate, bench"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a family labeling");
    construct->add_option("--family", ca.family, "family name")->required();
    construct->add_option("--n", ca.n, "size parameter");
    construct->add_option("--s", ca.s, "bipartite side A");
    construct->add_option("--t", ca.t, "bipartite side B");
    construct->add_flag("--uniform", ca.uniform, "equal label sizes");
    construct->add_option("--out", ca.out_path, "output labeling file");

    std::string graph_path, labels_path, format, cert_path, out_graph, out_labels, out_path,
        csv_path;
    std::string param = "usn";
    bool as_json = false, add_universal = false;
    std::vector<int> delete_edge_uv;
    std::optional<int> max_universe;
    std::optional<double> budget;

    auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
    verify_cmd->add_option("--graph", graph_path, "graph file")->required();
    verify_cmd->add_option("--labels", labels_path, "labeling file")->required();
    verify_cmd->add_option("--format", format, "graph format (edge_list|graph6)");
    verify_cmd->add_flag("--json", as_json, "JSON report");

    auto* exact = app.add_subcommand("exact", "exact parameter minimization");
    exact->add_option("--graph", graph_path, "graph file")->required();
    exact->add_option("--param", param, "usn|iln|uusn");
    exact->add_option("--format", format, "graph format");
    exact->add_option("--max-universe", max_universe, "universe cap");
    exact->add_option("--budget", budget, "time budget in seconds");
    exact->add_option("--cert", cert_path, "certificate output file");

    auto* mutate = app.add_subcommand("mutate", "labeling-preserving graph mutation");
    mutate->add_option("--graph", graph_path, "graph file")->required();
    mutate->add_option("--labels", labels_path, "labeling file")->required();
    mutate->add_option("--format", format, "graph format");
    mutate->add_flag("--add-universal", add_universal, "append a universal vertex");
    mutate->add_option("--delete-edge", delete_edge_uv, "edge endpoints u v")->expected(2);
    mutate->add_option("--out-graph", out_graph, "output graph file");
    mutate->add_option("--out-labels", out_labels, "output labeling file");

    auto* label_any = app.add_subcommand("label-any", "valid labeling of any graph");
    label_any->add_option("--graph", graph_path, "graph file")->required();
    label_any->add_option("--format", format, "graph format");
    label_any->add_option("--out", out_path, "output labeling file");

    std::string families_list;
    int max_n = 0;
    auto* bench = app.add_subcommand("bench", "tabulate construction sizes against bounds");
    bench->add_option("--families", families_list, "comma-separated family list")->required();
    bench->add_option("--max-n", max_n, "largest size parameter")->required();
    bench->add_option("--csv", csv_path, "CSV output file");

    std::vector<const char*> argv;
    argv.push_back("usn");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(ca, out);
        if (verify_cmd->parsed()) return cmd_verify(graph_path, labels_path, format, as_json, out);
        if (exact->parsed())
            return cmd_exact(graph_path, param, format, max_universe, budget, cert_path, out);
        if (mutate->parsed())
            return cmd_mutate(graph_path, labels_path, format, add_universal, delete_edge_uv,
                              out_graph, out_labels, out);
        if (label_any->parsed()) return cmd_label_any(graph_path, format, out_path, out);
        if (bench->parsed()) return cmd_bench(families_list, max_n, csv_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace usn
