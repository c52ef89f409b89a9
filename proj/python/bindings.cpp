#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dompoly/coeffs.hpp"
#include "dompoly/equivalence.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"
#include "dompoly/structure.hpp"

namespace py = pybind11;
using namespace dompoly;

namespace {

// coefficients cross the boundary as decimal strings so Python gets
// true bignums
py::list coeff_list(const DomPolynomial& p) {
    py::object toint = py::module_::import("builtins").attr("int");
    py::list out;
    for (const auto& c : p.coeffs) out.append(toint(c.get_str()));
    return out;
}

PolyConfig make_config(int cap, int workers) {
    PolyConfig cfg;
    cfg.brute_force_cap = cap;
    cfg.workers = workers;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_dompoly, m) {
    m.doc() = "exact domination polynomial toolkit";

    py::register_exception<cap_exceeded>(m, "CapExceeded");

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges",
                    [](int n, const std::vector<std::pair<int, int>>& e) {
                        return Graph::from_edge_list(n, e);
                    },
                    py::arg("n"), py::arg("edges"))
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def_static("tilde_path", &Graph::tilde_path)
        .def_static("pendant_cycle", &Graph::pendant_cycle)
        .def_static("h_graph", &Graph::h_graph)
        .def_static("disjoint_union", &Graph::disjoint_union)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + describe(g) + ">";
        });

    m.def("to_graph6", &to_graph6);
    m.def("from_graph6", &from_graph6);
    m.def("canonical_form", &canonical_form);
    m.def("describe", &describe);

    m.def("dom_poly",
          [](const Graph& g, int cap, int workers) {
              return coeff_list(dom_poly(g, make_config(cap, workers)));
          },
          py::arg("g"), py::arg("cap") = 26, py::arg("workers") = 1);
    m.def("dom_poly_bruteforce",
          [](const Graph& g, int cap, int workers) {
              return coeff_list(dom_poly_bruteforce(g, make_config(cap, workers)));
          },
          py::arg("g"), py::arg("cap") = 26, py::arg("workers") = 1);
    m.def("path_poly", [](int n) { return coeff_list(path_poly(n)); });
    m.def("cycle_poly", [](int n) { return coeff_list(cycle_poly(n)); });
    m.def("gamma", [](const Graph& g) { return dom_poly(g).gamma(); });
    m.def("d_equivalent",
          [](const Graph& g, const Graph& h) { return d_equivalent(g, h); });
    m.def("path_top_coeffs", [](int n) {
        py::object toint = py::module_::import("builtins").attr("int");
        py::list out;
        for (const auto& c : path_top_coeffs(n)) out.append(toint(c.get_str()));
        return out;
    });
    m.def("structure_summary", [](const Graph& g) {
        StructureProfile p = structure_profile(g);
        py::dict d;
        d["stems"] = std::vector<int>(p.stems.begin(), p.stems.end());
        d["leaves"] = std::vector<int>(p.leaves.begin(), p.leaves.end());
        d["t1"] = p.t(1);
        d["t2"] = p.t(2);
        d["loops3"] = p.loop_count(3);
        d["cycle3_components"] = p.cycles(3);
        d["cycle4_components"] = p.cycles(4);
        return d;
    });
}
