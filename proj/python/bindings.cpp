#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "holonomy/action.hpp"
#include "holonomy/construction.hpp"
#include "holonomy/dihedral.hpp"
#include "holonomy/errors.hpp"
#include "holonomy/io.hpp"
#include "holonomy/measures.hpp"
#include "holonomy/typespace.hpp"
#include "holonomy/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace holonomy;

namespace {

Color color_of(const std::string& s) {
    if (s.size() != 1 || !color_from_char(s[0])) fail(ErrorKind::Config, "color must be one of A, B, C, D");
    return *color_from_char(s[0]);
}

py::dict cost_report_dict(const CostReport& rep) {
    py::list trend;
    for (const auto& t : rep.trend)
        trend.append(py::dict("stage"_a = t.stage, "parity"_a = t.parity, "size"_a = t.size,
                              "edge_measure"_a = t.edge_measure, "free_fraction"_a = t.free_fraction,
                              "cost_estimate"_a = t.cost_estimate));
    return py::dict("m"_a = rep.m, "levels"_a = rep.levels, "r"_a = rep.r, "k"_a = rep.k,
                    "edge_measure_mu1"_a = rep.edge_measure_mu1, "free_fraction_mu2"_a = rep.free_fraction_mu2,
                    "cost_estimate_mu2"_a = rep.cost_estimate_mu2, "tv_distance"_a = rep.tv_distance,
                    "gap"_a = rep.gap, "mu1_stage"_a = rep.even_stage, "mu2_stage"_a = rep.odd_stage,
                    "edge_measure_mu2"_a = rep.edge_measure_mu2, "free_fraction_mu1"_a = rep.free_fraction_mu1,
                    "trend"_a = trend, "warnings"_a = rep.warnings);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Staged Schreier graphs of Z2*Z2*Z2*Z2";

    // Error kinds surface as distinct Python exceptions. The handles are
    // leaked on purpose: they must outlive interpreter shutdown.
    static PyObject* kinds[3];
    PyObject* base = py::exception<Error>(m, "HolonomyError", PyExc_RuntimeError).release().ptr();
    kinds[0] = py::exception<Error>(m, "ConfigError", base).release().ptr();
    kinds[1] = py::exception<Error>(m, "InvariantError", base).release().ptr();
    kinds[2] = py::exception<Error>(m, "BudgetError", base).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(kinds[exit_code(e.kind()) - 2], e.what());
        }
    });

    py::class_<ConstructionConfig>(m, "Config")
        .def(py::init([](std::uint64_t m_, std::uint32_t levels, const std::string& schedule,
                         std::uint64_t diam_multiplier, Distance girth, std::uint32_t chord, std::uint64_t seed,
                         std::uint64_t max_vertices) {
                 ConstructionConfig c;
                 c.m = m_;
                 c.levels = levels;
                 c.schedule = schedule_mode_from_string(schedule);
                 c.diam_multiplier = diam_multiplier;
                 c.girth_target = girth;
                 c.chord_span = chord;
                 c.seed = seed;
                 c.max_vertices = max_vertices;
                 return c;
             }),
             "m"_a = 12, "levels"_a = 3, "schedule"_a = "desk", "diam_multiplier"_a = 10, "girth"_a = 12,
             "chord"_a = 13, "seed"_a = 0, "max_vertices"_a = 40'000'000)
        .def_readwrite("m", &ConstructionConfig::m)
        .def_readwrite("levels", &ConstructionConfig::levels)
        .def_property(
            "schedule", [](const ConstructionConfig& c) { return to_string(c.schedule); },
            [](ConstructionConfig& c, const std::string& s) { c.schedule = schedule_mode_from_string(s); })
        .def_readwrite("diam_multiplier", &ConstructionConfig::diam_multiplier)
        .def_readwrite("girth", &ConstructionConfig::girth_target)
        .def_readwrite("chord", &ConstructionConfig::chord_span)
        .def_readwrite("seed", &ConstructionConfig::seed)
        .def_readwrite("max_vertices", &ConstructionConfig::max_vertices)
        .def("validate", &ConstructionConfig::validate);

    py::class_<ColoredGraph>(m, "Graph")
        .def_property_readonly("vertex_count", &ColoredGraph::vertex_count)
        .def("edge_count", py::overload_cast<>(&ColoredGraph::edge_count, py::const_))
        .def("degree", &ColoredGraph::degree, "v"_a)
        .def("neighbor",
             [](const ColoredGraph& g, VertexId v, const std::string& c) -> std::optional<VertexId> {
                 if (v >= g.vertex_count()) fail(ErrorKind::Config, "vertex out of range");
                 const VertexId w = g.neighbor(v, color_of(c));
                 return w == kNoVertex ? std::nullopt : std::optional<VertexId>(w);
             },
             "v"_a, "color"_a)
        .def("role", [](const ColoredGraph& g, VertexId v) { return role_tag(g.meta(v)); }, "v"_a)
        .def("apply",
             [](const ColoredGraph& g, const std::string& word, VertexId x) { return apply(g, Word::parse(word), x); },
             "word"_a, "x"_a)
        .def("is_free", [](const ColoredGraph& g, VertexId x, std::uint32_t k) { return is_free(g, x, k); }, "x"_a,
             "k"_a)
        .def("to_json", [](const ColoredGraph& g) {
            std::ostringstream out;
            write_graph_json(g, out);
            return out.str();
        });

    py::class_<BuildResult>(m, "Build")
        .def_readonly("graph", &BuildResult::graph)
        .def_property_readonly("levels", [](const BuildResult& b) { return b.log.levels(); })
        .def("size", [](const BuildResult& b, std::uint32_t n) { return b.log.size(n); }, "n"_a)
        .def("omega", [](const BuildResult& b, std::uint32_t n) {
            const auto r = b.log.omega(n);
            return py::make_tuple(r.begin, r.end);
        }, "n"_a)
        .def("frontier", [](const BuildResult& b) { return b.log.frontier(); })
        .def("log_json", [](const BuildResult& b) {
            std::ostringstream out;
            write_build_log(b.log, out);
            return out.str();
        });

    m.def("build", &build, "config"_a, py::call_guard<py::gil_scoped_release>());
    m.def("verify",
          [](const BuildResult& b) {
              py::gil_scoped_release release;
              const auto checks = verify_build(b.graph, b.log);
              py::gil_scoped_acquire acquire;
              py::list out;
              for (const auto& c : checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
              return out;
          },
          "build"_a);
    m.def("report",
          [](const BuildResult& b, std::uint32_t r, std::uint32_t k) {
              const auto table = compute_types(b.graph, std::max<std::uint32_t>(r, 1));
              return cost_report_dict(gap_report(b.graph, b.log, table, r, k));
          },
          "build"_a, "r"_a = 2, "k"_a = 5);
    m.def("cost_estimate", &cost_estimate, "free_fraction"_a);
    m.def("nth_word", [](std::uint64_t n) { return nth_word(n).str(); }, "n"_a);
    m.def("word_rank", [](const std::string& w) { return word_rank(Word::parse(w)); }, "word"_a);
    m.def("dihedral_demo",
          [](std::uint32_t n, std::uint32_t r, std::uint32_t budget) {
              const auto d = dihedral_demo(n, r, budget == 0 ? n : budget);
              return py::dict("n"_a = d.n, "r"_a = d.r, "stable_labels"_a = d.stable_labels.size(),
                              "stable_types"_a = d.stable_types, "largest_class"_a = d.largest_class,
                              "generic"_a = d.generic, "m_alpha_label1"_a = d.m_alpha_vertex1,
                              "transport_found"_a = d.transport_found);
          },
          "n"_a, "r"_a = 2, "budget"_a = 0);
}
