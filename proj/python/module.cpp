#include "taskdag/analysis.hpp"
#include "taskdag/error.hpp"
#include "taskdag/families.hpp"
#include "taskdag/graph.hpp"
#include "taskdag/harness.hpp"
#include "taskdag/oracle.hpp"
#include "taskdag/processes.hpp"
#include "taskdag/serialize.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace taskdag;

namespace {

py::object to_py(const BigInt& value) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& value) {
    return py::module_::import("fractions").attr("Fraction")(to_string(value));
}

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

ProcessConfig make_config(const std::string& process, int x, int y, int n, std::uint64_t seed,
                          std::optional<std::int64_t> m, const std::string& semantics) {
    ProcessConfig cfg;
    cfg.kind = parse_process_kind(process);
    cfg.x = x;
    cfg.y = y;
    cfg.n = n;
    cfg.m = m;
    cfg.seed = seed;
    cfg.semantics = parse_semantics(semantics);
    return cfg;
}

py::list edge_list(const OrderedDag& g) {
    py::list out;
    for (const Edge& e : g.edges()) out.append(py::make_tuple(e.from, e.to));
    return out;
}

py::dict outcome_dict(const ProcessOutcome& outcome) {
    py::dict out;
    out["graph"] = outcome.graph;
    out["rounds"] = outcome.rounds;
    out["attempts"] = outcome.attempts ? py::object(py::int_(*outcome.attempts)) : py::object(py::none());
    out["halt_reason"] = std::string(to_string(outcome.halt_reason));
    out["is_target_xy"] = outcome.is_target_xy;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Random task-dependency graph processes, extremal analysis and brute-force oracles";

    static py::exception<Error> base(m, "TaskdagError", PyExc_ValueError);
    static py::exception<Error> domain(m, "DomainError", base.ptr());
    static py::exception<Error> config_kind(m, "ConfigKindError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string message = std::string(to_string(e.kind())) + ": " + e.what();
            switch (e.kind()) {
            case ErrorKind::Domain: PyErr_SetString(domain.ptr(), message.c_str()); break;
            case ErrorKind::ConfigKind: PyErr_SetString(config_kind.ptr(), message.c_str()); break;
            default: PyErr_SetString(base.ptr(), message.c_str()); break;
            }
        }
    });

    py::class_<OrderedDag>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &OrderedDag::order)
        .def_property_readonly("edge_count", &OrderedDag::edge_count)
        .def_property_readonly("initial_count", &OrderedDag::initial_count)
        .def_property_readonly("terminal_count", &OrderedDag::terminal_count)
        .def_property_readonly("isolated_count", &OrderedDag::isolated_count)
        .def("has_edge", &OrderedDag::has_edge)
        .def("add_edge", &OrderedDag::add_edge)
        .def("remove_edge", &OrderedDag::remove_edge)
        .def("in_degree", &OrderedDag::in_degree)
        .def("out_degree", &OrderedDag::out_degree)
        .def("edges", &edge_list)
        .def("longest_path_length", &longest_path_length)
        .def("components", &underlying_components)
        .def("is_forest", &is_underlying_forest)
        .def("to_json", [](const OrderedDag& g) { return to_json(g); })
        .def("to_dot", &to_dot)
        .def("__eq__", [](const OrderedDag& a, const OrderedDag& b) { return a == b; })
        .def("__repr__", [](const OrderedDag& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("from_json", &graph_from_json, py::arg("text"));
    m.def(
        "build_family",
        [](const std::string& kind, int x, int y, int n) { return build_family(parse_family_kind(kind), x, y, n); },
        py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("n"));

    m.def(
        "run_process",
        [](const std::string& process, int x, int y, int n, std::uint64_t seed, std::optional<std::int64_t> edges,
           const std::string& semantics) {
            const ProcessConfig cfg = make_config(process, x, y, n, seed, edges, semantics);
            ProcessOutcome outcome = [&] {
                py::gil_scoped_release release;
                return run_process(cfg);
            }();
            return outcome_dict(outcome);
        },
        py::arg("process"), py::arg("x"), py::arg("y"), py::arg("n"), py::arg("seed"), py::arg("m") = py::none(),
        py::arg("semantics") = "permutation");
    m.def("random_directed_tree", &random_directed_tree, py::arg("n"), py::arg("seed"));
    m.def("combined_edge_bounds", &combined_edge_bounds, py::arg("x"), py::arg("y"), py::arg("n"));

    m.def(
        "run_trials",
        [](const std::string& process, int x, int y, int n, std::size_t trials, std::uint64_t seed,
           std::optional<std::int64_t> edges, const std::string& semantics, unsigned jobs) {
            const ProcessConfig cfg = make_config(process, x, y, n, seed, edges, semantics);
            std::string text;
            {
                py::gil_scoped_release release;
                text = to_json(run_trials(cfg, trials, seed, jobs));
            }
            return json_loads(text);
        },
        py::arg("process"), py::arg("x"), py::arg("y"), py::arg("n"), py::arg("trials"), py::arg("seed"),
        py::arg("m") = py::none(), py::arg("semantics") = "permutation", py::arg("jobs") = 1);
    m.def(
        "table_experiment",
        [](const std::string& process, const std::vector<std::pair<int, int>>& pairs, int n_min, int n_max,
           std::size_t trials, std::uint64_t seed, unsigned jobs) {
            const ProcessKind kind = parse_process_kind(process);
            py::gil_scoped_release release;
            return table_experiment(kind, pairs, n_min, n_max, trials, seed, jobs);
        },
        py::arg("process"), py::arg("pairs"), py::arg("n_min"), py::arg("n_max"), py::arg("trials"),
        py::arg("seed"), py::arg("jobs") = 1);
    m.def(
        "growth_experiment",
        [](const std::string& process, int x, int y, const std::vector<int>& ns, std::size_t trials,
           std::uint64_t seed, unsigned jobs) {
            const ProcessKind kind = parse_process_kind(process);
            py::gil_scoped_release release;
            return growth_experiment(kind, x, y, ns, trials, seed, jobs);
        },
        py::arg("process"), py::arg("x"), py::arg("y"), py::arg("n_list"), py::arg("trials"), py::arg("seed"),
        py::arg("jobs") = 1);

    m.def(
        "extremal_value",
        [](const std::string& kind, int x, int y, int n) {
            return to_py(extremal_value(parse_extremal_kind(kind), x, y, n));
        },
        py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("n"));
    m.def("is_minimal_xy", &is_minimal_xy, py::arg("g"));
    m.def("find_removable_path", &find_removable_path, py::arg("g"));
    m.def(
        "classify_extremal",
        [](const OrderedDag& g, int x, int y) {
            const StructureCase found = classify_extremal(g, x, y);
            py::dict witness;
            witness["components"] = found.witness.components;
            witness["interior"] = found.witness.interior;
            witness["hub_initial"] = found.witness.hub_initial;
            witness["hub_terminal"] = found.witness.hub_terminal;
            witness["p"] = found.witness.p;
            witness["q"] = found.witness.q;
            return py::make_tuple(std::string(to_string(found.label)), witness);
        },
        py::arg("g"), py::arg("x"), py::arg("y"));
    m.def(
        "count_linear_extensions",
        [](const OrderedDag& g, int cap) { return to_py(count_linear_extensions(g, cap)); }, py::arg("g"),
        py::arg("cap") = kDefaultLinextCap);
    m.def(
        "retention_probability_bound",
        [](int r, int s, int n) { return to_py(retention_probability_bound(r, s, n)); }, py::arg("r"), py::arg("s"),
        py::arg("n"));
    m.def(
        "expected_tree_path_length", [](int k) { return to_py(expected_tree_path_length(k)); }, py::arg("k"));
    m.def("removal_density_limit", &removal_density_limit);

    m.def(
        "oracle_extremal",
        [](const std::string& kind, int x, int y, int n, bool allow_extended) -> py::object {
            std::optional<BigInt> value;
            {
                py::gil_scoped_release release;
                value = oracle::extremal(parse_extremal_kind(kind), x, y, n, allow_extended);
            }
            return value ? to_py(*value) : py::object(py::none());
        },
        py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("n"), py::arg("allow_extended") = false);
    m.def("oracle_is_minimal", &oracle::is_minimal, py::arg("g"), py::arg("x"), py::arg("y"));
}
