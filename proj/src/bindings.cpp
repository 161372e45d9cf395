// Python bindings. Structured results cross the boundary as JSON strings
// (the same documents the CLI writes); the pure-python wrapper decodes
// them into dicts so both front ends share one serialization path.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>

#include "sizeramsey/errors.hpp"
#include "sizeramsey/experiments.hpp"
#include "sizeramsey/rng.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

Graph make_graph(std::uint32_t vertex_count,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    return Graph(vertex_count, std::move(edges));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_pairs(const Graph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "size-Ramsey path workbench core";

    py::register_exception<InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
    py::register_exception<OutOfRegime>(m, "OutOfRegimeError");
    py::register_exception<CapExceeded>(m, "CapExceededError");
    py::register_exception<RetryExhausted>(m, "RetryExhaustedError");
    py::register_exception<InvariantViolation>(m, "InvariantViolationError");

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &edge_pairs)
        .def("degree", &Graph::degree, py::arg("v"))
        .def_static("complete", &Graph::complete, py::arg("vertex_count"))
        .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
        .def_static("from_json",
                    [](const std::string& s) { return graph_from_json(Json::parse(s)); })
        .def("to_edge_list", &graph_to_edge_list)
        .def_static("from_edge_list", &graph_from_edge_list)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    py::class_<Colouring>(m, "Colouring")
        .def(py::init<std::uint32_t, std::vector<std::uint32_t>>(), py::arg("colour_count"),
             py::arg("values"))
        .def_property_readonly("colour_count", &Colouring::colour_count)
        .def("values", &Colouring::values)
        .def("class_sizes", &Colouring::class_sizes)
        .def("to_json", [](const Colouring& c) { return colouring_to_json(c).dump(); })
        .def_static("from_json",
                    [](const std::string& s) { return colouring_from_json(Json::parse(s)); });

    py::class_<RamseyParams>(m, "RamseyParams")
        .def_static("make", &RamseyParams::make, py::arg("n"), py::arg("r"))
        .def_static("with_probability", &RamseyParams::with_probability, py::arg("n"),
                    py::arg("r"), py::arg("p"))
        .def_readonly("n", &RamseyParams::n)
        .def_readonly("r", &RamseyParams::r)
        .def_readonly("host_vertices", &RamseyParams::host_vertices)
        .def_readonly("edge_probability", &RamseyParams::edge_probability)
        .def_readonly("expansion_budget", &RamseyParams::expansion_budget)
        .def_readonly("edge_lower", &RamseyParams::edge_lower)
        .def_readonly("edge_upper", &RamseyParams::edge_upper)
        .def_readonly("phase_count", &RamseyParams::phase_count)
        .def_readonly("out_of_regime", &RamseyParams::out_of_regime);

    m.def("splitmix64", &splitmix64, py::arg("x"));
    m.def("derive_seed", &derive_seed, py::arg("base"), py::arg("index"));

    m.def("sample_gnp", &sample_gnp, py::arg("vertex_count"), py::arg("p"), py::arg("seed"));
    m.def(
        "build_host",
        [](const RamseyParams& params, std::uint64_t seed, std::uint64_t retry_limit) {
            HostOptions opts;
            opts.retry_limit = retry_limit;
            auto [g, report] = build_host(params, seed, opts);
            return py::make_tuple(std::move(g), sample_report_to_json(report).dump());
        },
        py::arg("params"), py::arg("seed"), py::arg("retry_limit") = 100);
    m.def("expected_pair_edges", &expected_pair_edges, py::arg("params"));
    m.def(
        "chernoff_failure_bound",
        [](const RamseyParams& params) {
            const ChernoffBound b = chernoff_failure_bound(params);
            return py::make_tuple(b.log_exact, b.log_simplified);
        },
        py::arg("params"));
    m.def("union_bound_coefficient", &union_bound_coefficient, py::arg("r"));
    m.def("union_bound_log_failure", &union_bound_log_failure, py::arg("params"));
    m.def("minimize_parametric_c", &minimize_parametric_c, py::arg("r"));
    m.def(
        "bound_table",
        [](const std::vector<std::uint32_t>& rs, std::optional<double> c) {
            return bound_table_to_json(make_bound_table(rs, c)).dump();
        },
        py::arg("rs"), py::arg("c") = std::nullopt);
    m.def("geometric_r_grid", &geometric_r_grid, py::arg("r_min"), py::arg("r_max"),
          py::arg("steps"));

    m.def(
        "check_expansion_exact",
        [](const Graph& g, std::uint32_t n, double budget, std::uint64_t pair_cap) {
            ExpansionCapOptions caps;
            caps.pair_cap = pair_cap;
            return expansion_run_to_json(run_check_expansion_exact(g, n, budget, caps)).dump();
        },
        py::arg("graph"), py::arg("n"), py::arg("budget"),
        py::arg("pair_cap") = std::uint64_t{100'000'000});
    m.def(
        "check_expansion_monte_carlo",
        [](const Graph& g, std::uint32_t n, double budget, std::uint64_t trials,
           std::uint64_t seed) {
            return expansion_run_to_json(run_check_expansion_monte_carlo(g, n, budget, trials, seed))
                .dump();
        },
        py::arg("graph"), py::arg("n"), py::arg("budget"), py::arg("trials"), py::arg("seed"));

    m.def(
        "adversary_colour",
        [](const Graph& g, std::uint32_t n, std::uint32_t r, const std::string& strategy,
           std::uint64_t seed) { return adversary_colour(g, n, r, parse_strategy(strategy), seed); },
        py::arg("graph"), py::arg("n"), py::arg("r"), py::arg("strategy"), py::arg("seed"));
    m.def(
        "find_monochromatic_path",
        [](const Graph& g, const Colouring& c, std::uint32_t n, bool try_all_colours) {
            FindPathOptions opts;
            opts.try_all_colours = try_all_colours;
            return certificate_to_json(find_monochromatic_path(g, c, n, opts)).dump();
        },
        py::arg("graph"), py::arg("colouring"), py::arg("n"), py::arg("try_all_colours") = false);
    m.def(
        "phase_run",
        [](const Graph& g, const Colouring& c, std::uint32_t colour, std::uint32_t n,
           std::uint32_t phase_count) {
            return certificate_to_json(phase_run(g, c, colour, n, phase_count)).dump();
        },
        py::arg("graph"), py::arg("colouring"), py::arg("colour"), py::arg("n"),
        py::arg("phase_count"));
    m.def(
        "trial_chain",
        [](const Graph& g, const Colouring& c, const RamseyParams& params) {
            const DfsCertificate cert = find_monochromatic_path(g, c, params.n);
            Json j;
            j["certificate"] = certificate_to_json(cert);
            j["chain"] = cert.outcome == DfsOutcome::path_found
                             ? Json(nullptr)
                             : chain_report_to_json(
                                   check_contradiction_chain(cert, params, g.edge_count()));
            return j.dump();
        },
        py::arg("graph"), py::arg("colouring"), py::arg("params"));

    m.def(
        "longest_path",
        [](const Graph& g, std::uint32_t cap) {
            const LongestPathResult res = longest_path_exact(g, cap);
            return py::make_tuple(res.length, res.witness.vertices);
        },
        py::arg("graph"), py::arg("cap") = 16u);
    m.def(
        "arrows_decide",
        [](const Graph& g, std::uint32_t n, std::uint32_t r, bool canonicalize,
           std::uint64_t colouring_cap, std::uint32_t path_cap) {
            ArrowOptions opts;
            opts.canonicalize = canonicalize;
            opts.colouring_cap = colouring_cap;
            opts.path_vertex_cap = path_cap;
            return verdict_to_json(arrows_decide(g, n, r, opts)).dump();
        },
        py::arg("graph"), py::arg("n"), py::arg("r"), py::arg("canonicalize") = true,
        py::arg("colouring_cap") = std::uint64_t{1} << 20, py::arg("path_cap") = 16u);
    m.def(
        "min_size_ramsey",
        [](std::uint32_t n, std::uint32_t r, std::uint32_t vertex_cap) {
            const MinRamseyResult res = min_size_ramsey(n, r, vertex_cap);
            Json j;
            j["m"] = res.edge_count;
            j["witness"] = graph_to_json(res.witness);
            j["graphs_examined"] = res.graphs_examined;
            j["vertex_cap"] = res.vertex_cap;
            return j.dump();
        },
        py::arg("n"), py::arg("r"), py::arg("vertex_cap"));

    m.def(
        "run_ramsey_trials",
        [](const RamseyParams& params, const std::string& strategy, std::uint64_t trials,
           std::uint64_t seed) {
            const AdversaryStrategy s = parse_strategy(strategy);
            const RamseyTrialResult res = run_ramsey_trials(params, s, trials, seed);
            return trials_to_json(res, params, s, seed, false).dump();
        },
        py::arg("params"), py::arg("strategy"), py::arg("trials"), py::arg("seed"));
}
