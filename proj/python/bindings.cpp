#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cpmatch/bench.hpp"
#include "cpmatch/bp.hpp"
#include "cpmatch/cutting_plane.hpp"
#include "cpmatch/graph.hpp"
#include "cpmatch/lp.hpp"
#include "cpmatch/oracle.hpp"
#include "cpmatch/transform.hpp"

namespace py = pybind11;
using namespace cpmatch;

namespace {

OddCycleSet cycles_from_lists(const WeightedGraph& g,
                              const std::vector<std::vector<int>>& lists) {
    OddCycleSet cs;
    for (const auto& verts : lists) cs.cycles.push_back(make_cycle(g, verts));
    validate_cycle_set(g, cs);
    return cs;
}

std::vector<std::vector<int>> cycles_to_lists(const OddCycleSet& cs) {
    std::vector<std::vector<int>> out;
    for (const OddCycle& c : cs.cycles) out.push_back(c.vertices);
    return out;
}

std::string tern_str(Tern t) { return to_string(t); }

py::dict lp_solution_dict(const LPSolution& sol) {
    py::dict d;
    py::list values;
    for (const Rational& v : sol.x) {
        std::ostringstream ss;
        ss << v;
        values.append(ss.str());
    }
    std::ostringstream obj;
    obj << sol.objective;
    d["values"] = values;
    d["objective"] = obj.str();
    d["is_integral"] = sol.is_integral;
    d["is_half_integral"] = sol.is_half_integral;
    return d;
}

py::dict outcome_dict(const WeightedGraph& g, const CPOutcome& out) {
    py::dict d;
    d["status"] = to_string(out.status);
    d["weight"] = out.weight;
    py::list edges;
    for (int id : out.matching.edge_ids) {
        const Edge& e = g.edge(id);
        edges.append(py::make_tuple(e.u, e.v, e.w));
    }
    d["matching"] = edges;
    d["cycles"] = cycles_to_lists(out.cycles);
    d["rounds"] = out.log.size();
    py::list x;
    for (Tern t : out.x) x.append(tern_str(t));
    d["x"] = x;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cpmatch, m) {
    m.doc() = "Belief-propagation and cutting-plane solvers for maximum weight matching";

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init([](int n, const std::vector<std::tuple<int, int, std::int64_t>>& edges) {
                 std::vector<Edge> es;
                 for (auto& [u, v, w] : edges) es.push_back({u, v, w});
                 return WeightedGraph(n, std::move(es));
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def("edges",
             [](const WeightedGraph& g) {
                 std::vector<std::tuple<int, int, std::int64_t>> out;
                 for (const Edge& e : g.edges()) out.push_back({e.u, e.v, e.w});
                 return out;
             })
        .def("__repr__", [](const WeightedGraph& g) {
            return "WeightedGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("format_graph", &format_graph, py::arg("graph"));
    m.def("generate_instance", &generate_instance, py::arg("n"), py::arg("p"),
          py::arg("w_max"), py::arg("seed"));

    m.def(
        "find_odd_cycle",
        [](const WeightedGraph& g, py::object allowed, py::object forbidden) -> py::object {
            std::vector<bool> a, f;
            if (!allowed.is_none()) a = allowed.cast<std::vector<bool>>();
            if (!forbidden.is_none()) f = forbidden.cast<std::vector<bool>>();
            OddCycle c;
            if (!find_odd_cycle(g, a, f, c)) return py::none();
            return py::cast(c.vertices);
        },
        py::arg("graph"), py::arg("allowed") = py::none(), py::arg("forbidden") = py::none());

    m.def(
        "validate_matching",
        [](const WeightedGraph& g, const std::vector<int>& edge_ids) {
            MatchingCheck chk = validate_matching(g, Matching{edge_ids});
            return py::make_tuple(chk.ok, chk.total_weight, chk.offending_vertex);
        },
        py::arg("graph"), py::arg("edge_ids"));

    m.def(
        "transform_graph",
        [](const WeightedGraph& g, const std::vector<std::vector<int>>& cycles) {
            TransformedModel model = build_transform(g, cycles_from_lists(g, cycles));
            py::dict d;
            std::vector<std::tuple<int, int, std::int64_t>> edges;
            for (const EdgePrime& e : model.edges_prime()) edges.push_back({e.a, e.b, e.w2});
            d["vertex_count"] = model.vertex_count_prime();
            d["edges"] = edges;
            d["text"] = format_transformed(model);
            d["provenance"] = format_provenance(model);
            return d;
        },
        py::arg("graph"), py::arg("cycles"));

    m.def(
        "run_bp",
        [](const WeightedGraph& g, const std::vector<std::vector<int>>& cycles, long T) {
            TransformedModel model = build_transform(g, cycles_from_lists(g, cycles));
            TransformedBPRun run = run_bp(model, T);
            Projection proj = project_y_to_x(model, run.y);
            py::dict d;
            d["converged"] = run.converged;
            d["rounds"] = run.rounds_used;
            py::list y, x;
            for (Tern t : run.y) y.append(tern_str(t));
            for (Tern t : proj.x) x.append(tern_str(t));
            d["y"] = y;
            d["x"] = x;
            d["in_domain"] = proj.in_domain;
            return d;
        },
        py::arg("graph"), py::arg("cycles"), py::arg("iterations") = 1000);

    m.def(
        "run_bp_baseline",
        [](const WeightedGraph& g, const std::vector<std::vector<int>>& cycles, long T) {
            BaselineBPRun run = run_bp_baseline(g, cycles_from_lists(g, cycles), T);
            py::dict d;
            d["converged"] = run.converged;
            d["rounds"] = run.rounds_used;
            py::list x;
            for (Tern t : run.x) x.append(tern_str(t));
            d["x"] = x;
            return d;
        },
        py::arg("graph"), py::arg("cycles"), py::arg("iterations") = 1000);

    m.def(
        "solve_clp",
        [](const WeightedGraph& g, const std::vector<std::vector<int>>& cycles) {
            return lp_solution_dict(solve(build_clp(g, cycles_from_lists(g, cycles))));
        },
        py::arg("graph"), py::arg("cycles"));

    m.def(
        "check_tight_unique",
        [](const WeightedGraph& g, const std::vector<std::vector<int>>& cycles) {
            TightUnique tu = check_tight_unique(g, cycles_from_lists(g, cycles));
            py::dict d = lp_solution_dict(tu.solution);
            d["tight"] = tu.tight;
            d["unique"] = tu.unique;
            return d;
        },
        py::arg("graph"), py::arg("cycles"));

    m.def(
        "cp_bp",
        [](const WeightedGraph& g, long T, int max_rounds) {
            if (max_rounds <= 0) max_rounds = default_max_rounds(g);
            return outcome_dict(g, cp_bp(g, T, max_rounds));
        },
        py::arg("graph"), py::arg("iterations") = 1000, py::arg("max_rounds") = 0);

    m.def(
        "cp_lp",
        [](const WeightedGraph& g, int max_rounds) {
            if (max_rounds <= 0) max_rounds = default_max_rounds(g);
            return outcome_dict(g, cp_lp(g, max_rounds));
        },
        py::arg("graph"), py::arg("max_rounds") = 0);

    m.def(
        "classify_instance",
        [](const WeightedGraph& g, long T) { return to_string(classify_instance(g, T)); },
        py::arg("graph"), py::arg("iterations") = 1000);

    m.def(
        "brute_force_mwm",
        [](const WeightedGraph& g) {
            OracleResult r = brute_force_mwm(g);
            py::dict d;
            std::vector<int> ids;
            for (int id = 0; id < g.edge_count(); ++id)
                if (r.best[id]) ids.push_back(id);
            d["edge_ids"] = ids;
            d["weight"] = r.best_objective;
            d["unique"] = r.is_unique;
            return d;
        },
        py::arg("graph"));
}
