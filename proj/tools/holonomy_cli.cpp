// holonomy: build, verify and report on staged Schreier graphs of Z2*Z2*Z2*Z2.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "holonomy/action.hpp"
#include "holonomy/construction.hpp"
#include "holonomy/dihedral.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/io.hpp"
#include "holonomy/measures.hpp"
#include "holonomy/typespace.hpp"
#include "holonomy/verify.hpp"

using namespace holonomy;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Config, "cannot write " + path);
    return out;
}

struct BuildArgs {
    ConstructionConfig config;
    std::string schedule = "desk";
    std::string graph_path = "graph.json";
    std::string log_path = "build.json";
};

int cmd_build(BuildArgs& a) {
    a.config.schedule = schedule_mode_from_string(a.schedule);
    const auto result = build(a.config);
    write_graph_json(result.graph, a.graph_path);
    write_build_log(result.log, a.log_path);
    std::cerr << "built " << result.graph.vertex_count() << " vertices over " << result.log.levels()
              << " stages -> " << a.graph_path << ", " << a.log_path << '\n';
    return 0;
}

struct VerifyArgs {
    std::string graph_path;
    std::string log_path;
    std::string out_path;
    VerifyOptions options;
};

int cmd_verify(const VerifyArgs& a) {
    const auto raw = read_graph_json(a.graph_path);
    const auto log = read_build_log(a.log_path);
    const auto checks = verify_build(raw, log, a.options);
    if (a.out_path.empty()) {
        write_checks(checks, std::cout);
    } else {
        auto out = open_out(a.out_path);
        write_checks(checks, out);
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
    std::cerr << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : exit_code(ErrorKind::Invariant);
}

struct ReportArgs {
    std::string graph_path;
    std::string log_path;
    std::uint32_t r = 2;
    std::uint32_t k = 5;
    std::uint32_t types_r_max = 0;  // 0: max(r, 1)
    std::uint32_t holonomy_r = 2;
    std::string out_path = "report.json";
    std::string types_csv;
    std::string holonomy_csv;
    std::string free_csv;
    std::string nets_csv;
};

int cmd_report(const ReportArgs& a) {
    const auto raw = read_graph_json(a.graph_path);
    const auto log = read_build_log(a.log_path);
    const ColoredGraph g = assemble(raw);
    if (log.size(log.levels()) != g.vertex_count()) fail(ErrorKind::Config, "graph and build log disagree on size");
    const std::uint32_t r_max = std::max({a.r, 1u, a.types_r_max, a.holonomy_csv.empty() ? 0u : a.holonomy_r});
    const auto table = compute_types(g, r_max);

    const auto rep = gap_report(g, log, table, a.r, a.k);
    {
        auto out = open_out(a.out_path);
        write_cost_report(rep, out);
    }
    if (!a.types_csv.empty()) {
        auto out = open_out(a.types_csv);
        write_type_csv(table, out);
    }
    if (!a.holonomy_csv.empty()) {
        // Stable vertices of the oldest stage that still sits well inside G_N.
        const std::uint32_t level = log.levels() >= 3 ? log.levels() - 2 : log.levels() - 1;
        const auto stable = stable_region(g, log.frontier(), a.holonomy_r, log.size(level));
        auto out = open_out(a.holonomy_csv);
        std::vector<HolonomyEntry> all;
        for (std::uint32_t r = 0; r <= a.holonomy_r; ++r) {
            auto entries = holonomy_report(g, table, r, stable);
            all.insert(all.end(), entries.begin(), entries.end());
        }
        write_holonomy_csv(all, out);
    }
    if (!a.free_csv.empty()) {
        auto out = open_out(a.free_csv);
        out << "vertex,free_at_" << a.k << ",type_fingerprint\n";
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << v << ',' << (is_free(g, v, a.k) ? 1 : 0) << ','
                << table.level(a.r).fingerprint[table.type_at(v, a.r)].hex() << '\n';
    }
    if (!a.nets_csv.empty()) {
        auto out = open_out(a.nets_csv);
        out << "stage,vertex,part\n";
        for (const auto& st : log.stages) {
            std::vector<std::uint16_t> part(st.h.size(), static_cast<std::uint16_t>(st.nets.size() + 1));
            for (std::size_t i = 0; i < st.nets.size(); ++i)
                for (VertexId v : st.nets[i]) part[v - st.h.begin] = static_cast<std::uint16_t>(i + 1);
            if (st.nets.empty()) continue;
            for (VertexId v = st.h.begin; v < st.h.end; ++v) out << st.stage << ',' << v << ',' << part[v - st.h.begin] << '\n';
        }
    }
    std::cerr << "gap " << rep.gap << ", tv " << rep.tv_distance << " -> " << a.out_path << '\n';
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

struct DemoArgs {
    std::uint32_t n = 100;
    std::uint32_t r = 2;
    std::uint32_t budget = 0;  // 0: n
};

int cmd_dihedral(const DemoArgs& a) {
    const auto rep = dihedral_demo(a.n, a.r, a.budget == 0 ? a.n : a.budget);
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["stable_labels"] = rep.stable_labels.size();
    j["stable_types"] = rep.stable_types;
    j["largest_class"] = rep.largest_class;
    j["generic"] = rep.generic;
    j["m_alpha_label1"] = rep.m_alpha_vertex1;
    j["transport_from"] = rep.transport_from;
    j["transport_budget"] = rep.transport_budget;
    j["transport_found"] = rep.transport_found;
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staged Schreier graphs of Z2*Z2*Z2*Z2: build, verify, report"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI or TOML file with flag values");

    BuildArgs build_args;
    auto* b = app.add_subcommand("build", "Run the staged construction");
    b->add_option("--m", build_args.config.m, "Scale parameter m")->capture_default_str();
    b->add_option("--levels", build_args.config.levels, "Number of stages N")->capture_default_str();
    b->add_option("--schedule", build_args.schedule, "paper or desk")
        ->check(CLI::IsMember({"paper", "desk"}))
        ->capture_default_str();
    b->add_option("--diam-mult", build_args.config.diam_multiplier, "Block diameter over s_n")->capture_default_str();
    b->add_option("--girth", build_args.config.girth_target, "Girth target of odd-stage blocks")->capture_default_str();
    b->add_option("--chord", build_args.config.chord_span, "Minimum chord span of odd-stage blocks")
        ->capture_default_str();
    b->add_option("--seed", build_args.config.seed, "Seed for block voltages")->required();
    b->add_option("--max-vertices", build_args.config.max_vertices, "Vertex budget")->capture_default_str();
    b->add_option("--out", build_args.graph_path, "Graph JSON")->capture_default_str();
    b->add_option("--log", build_args.log_path, "Build log JSON")->capture_default_str();

    VerifyArgs verify_args;
    auto* v = app.add_subcommand("verify", "Check every build invariant");
    v->add_option("--graph", verify_args.graph_path, "Graph JSON")->required();
    v->add_option("--log", verify_args.log_path, "Build log JSON")->required();
    v->add_option("--out", verify_args.out_path, "Check results, one JSON object per line (default stdout)");
    v->add_option("--defect-radius", verify_args.options.defect_radius)->capture_default_str();
    v->add_option("--genericity-radius", verify_args.options.genericity_radius)->capture_default_str();
    v->add_option("--max-free-radius", verify_args.options.max_free_radius)->capture_default_str();

    ReportArgs report_args;
    auto* r = app.add_subcommand("report", "Measures, cost estimates and type tables");
    r->add_option("--graph", report_args.graph_path, "Graph JSON")->required();
    r->add_option("--log", report_args.log_path, "Build log JSON")->required();
    r->add_option("--r", report_args.r, "Type radius of the measures")->capture_default_str();
    r->add_option("--k", report_args.k, "Word length for free fractions")->capture_default_str();
    r->add_option("--types-r-max", report_args.types_r_max, "Deepest radius in the type CSV");
    r->add_option("--holonomy-r", report_args.holonomy_r, "Deepest radius in the holonomy CSV")->capture_default_str();
    r->add_option("--out", report_args.out_path, "Cost report JSON")->capture_default_str();
    r->add_option("--types-csv", report_args.types_csv, "r,type_fingerprint,count,parent_fingerprint");
    r->add_option("--holonomy-csv", report_args.holonomy_csv, "radius,type_fingerprint,count,m_alpha");
    r->add_option("--free-csv", report_args.free_csv, "vertex,free_at_k,type_fingerprint");
    r->add_option("--nets-csv", report_args.nets_csv, "stage,vertex,part");

    DemoArgs demo_args;
    auto* d = app.add_subcommand("demo", "Contrast examples");
    d->require_subcommand(1);
    auto* dd = d->add_subcommand("dihedral", "Z2*Z2 on a window {1..n}");
    dd->add_option("--n", demo_args.n, "Window size")->capture_default_str();
    dd->add_option("--r", demo_args.r, "Type radius")->capture_default_str();
    dd->add_option("--budget", demo_args.budget, "Transport word budget (default n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code(ErrorKind::Config);
    }

    try {
        if (*b) return cmd_build(build_args);
        if (*v) return cmd_verify(verify_args);
        if (*r) return cmd_report(report_args);
        if (*dd) return cmd_dihedral(demo_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
