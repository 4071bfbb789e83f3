#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rlab/bounds.hpp"
#include "rlab/certify.hpp"
#include "rlab/errors.hpp"
#include "rlab/io.hpp"
#include "rlab/project.hpp"
#include "rlab/realize.hpp"
#include "rlab/spectral.hpp"
#include "rlab/treeball.hpp"

namespace py = pybind11;
using namespace rlab;

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "certified-yes";
        case Verdict::No: return "certified-no";
        default: return "indeterminate";
    }
}

const char* status_name(ProjectStatus s) {
    switch (s) {
        case ProjectStatus::Success: return "success";
        case ProjectStatus::Stuck: return "stuck";
        case ProjectStatus::Refuted: return "refuted";
        default: return "budget";
    }
}

} // namespace

PYBIND11_MODULE(rlab, m) {
    m.doc() = "spectral graph laboratory: cover-tree balls, degree matrices, "
              "Ramanujan-style certification";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("labels", &Graph::labels)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("load_graph", &load_graph, py::arg("path"));
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("star_graph", &star_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("prism_graph", &prism_graph);

    m.def("min_degree", &min_degree);
    m.def("max_degree", &max_degree);
    m.def("distance", [](const Graph& g, int u, int v) -> py::object {
        auto d = distance(g, u, v);
        return d ? py::cast(*d) : py::none();
    });
    m.def("ball", [](const Graph& g, int v, int r) {
        auto b = ball(g, v, r);
        return py::make_tuple(b.graph, b.map);
    });
    m.def("induced_subgraph", [](const Graph& g, const VertexSet& s) {
        auto b = induced_subgraph(g, s);
        return py::make_tuple(b.graph, b.map);
    });
    m.def("r_apart_greedy", &r_apart_greedy, py::arg("g"), py::arg("r"));
    m.def("r_apart_exact", &r_apart_exact, py::arg("g"), py::arg("r"));
    m.def("girth", [](const Graph& g) -> py::object {
        auto c = girth(g);
        return c ? py::cast(*c) : py::none();
    });
    m.def("odd_girth", [](const Graph& g) {
        auto og = odd_girth(g);
        return py::make_tuple(og.length ? py::cast(*og.length) : py::none(), og.two_coloring);
    });
    m.def("retracting_free_girth", [](const Graph& g, int v) -> py::object {
        auto c = retracting_free_girth(g, v);
        return c ? py::cast(*c) : py::none();
    });
    m.def("universal_girth", [](const Graph& g, int cap) -> py::object {
        auto c = universal_girth(g, cap);
        return c ? py::cast(*c) : py::none();
    }, py::arg("g"), py::arg("cap") = 64);

    m.def("eigen_full", [](const Graph& g) {
        auto s = eigen_full(g);
        return py::make_tuple(s.values, s.residual);
    });
    m.def("spectral_radius", &spectral_radius);
    m.def("walk_count", [](const Graph& g, int u, int len) {
        return walk_count(g, u, len).to_string();  // arbitrary precision as a string
    });
    m.def("walk_identity_check", &walk_identity_check, py::arg("d"), py::arg("r"), py::arg("q"));
    m.def("interlace_check", &interlace_check);

    py::class_<DegreeMatrix>(m, "DegreeMatrix")
        .def_static("from_rows", &DegreeMatrix::from_rows)
        .def_property_readonly("order", &DegreeMatrix::order)
        .def("at", &DegreeMatrix::at);
    m.def("load_degmat", &load_degmat);
    m.def("validate", [](const DegreeMatrix& d) {
        auto v = validate(d);
        return py::make_tuple(v.valid, v.reason, v.witness);
    });
    m.def("degrees", &degrees);
    m.def("class_sizes", [](const DegreeMatrix& d) { return class_sizes(d).counts; });
    m.def("symmetrize", &symmetrize);
    m.def("degree_matrix_spectrum", [](const DegreeMatrix& d) {
        return degree_matrix_spectrum(d).values;
    });

    py::class_<TypedTreeBall>(m, "TreeBall")
        .def_readonly("graph", &TypedTreeBall::graph)
        .def_readonly("root", &TypedTreeBall::root)
        .def_readonly("radius", &TypedTreeBall::radius)
        .def_readonly("depth", &TypedTreeBall::depth)
        .def_readonly("source", &TypedTreeBall::source);
    m.def("tree_ball", &tree_ball, py::arg("d"), py::arg("root_class"), py::arg("r"));
    m.def("deficient_tree_ball", &deficient_tree_ball, py::arg("d"), py::arg("r"));
    m.def("cycle_expanded_ball", &cycle_expanded_ball, py::arg("d"), py::arg("g"), py::arg("r"));
    m.def("ball_quotient_rho", &ball_quotient_rho, py::arg("d"), py::arg("root_class"),
          py::arg("r"));
    m.def("tree_graph_rho", &tree_graph_rho);

    m.def("realize", [](const DegreeMatrix& d, std::int64_t mult) {
        auto r = realize(d, mult);
        return py::make_tuple(r.graph, r.partition, r.multiplier);
    }, py::arg("d"), py::arg("min_multiplier") = 1);
    m.def("verify_equitable", [](const Graph& g, const std::vector<VertexSet>& p,
                                 const DegreeMatrix& d) { return verify_equitable(g, p, d); });
    m.def("verify_subdegree", [](const Graph& g, const std::vector<VertexSet>& p,
                                 const DegreeMatrix& d, int slack) {
        return verify_subdegree(g, p, d, slack);
    });

    m.def("subuniversal_project",
          [](const Graph& g, const DegreeMatrix& d, const std::vector<VertexSet>& subsets,
             int start, int start_class, int r, bool backtracking) {
              auto pr = subuniversal_project(g, d, subsets, start, start_class, r, backtracking);
              py::dict out;
              out["status"] = status_name(pr.status);
              out["map"] = pr.map;
              out["witness"] = pr.witness;
              out["nodes_explored"] = pr.nodes_explored;
              return out;
          },
          py::arg("g"), py::arg("d"), py::arg("subsets"), py::arg("start"),
          py::arg("start_class"), py::arg("r"), py::arg("backtracking") = false);

    m.def("rho_universal_cover", [](const DegreeMatrix& d, int cls, double tol, int r_max) {
        auto b = rho_universal_cover(d, cls, tol, r_max);
        py::dict out;
        out["lower"] = b.lower;
        out["upper"] = b.upper;
        out["radius_reached"] = b.radius_reached;
        out["converged"] = b.converged;
        out["samples"] = b.samples;
        return out;
    }, py::arg("d"), py::arg("root_class") = 0, py::arg("tol") = 1e-9, py::arg("r_max") = 10000);
    m.def("closed_form_rho", [](const DegreeMatrix& d) -> py::object {
        auto cf = closed_form_rho(d);
        return cf ? py::cast(*cf) : py::none();
    });
    m.def("deficient_ball_rho", &deficient_ball_rho, py::arg("d"), py::arg("r"));
    m.def("serre_r", [](int d, double eps) { return serre_r(d, eps).r; });
    m.def("serre_c", [](int d, int delta_max, double eps) {
        auto c = serre_c(d, delta_max, eps);
        return py::make_tuple(c.r, c.c, c.c_display);
    });
    m.def("paschke", [](int d, int g) {
        auto r = paschke(d, g);
        return py::make_tuple(r.rho, r.s_star, r.h);
    });
    m.def("paschke_rho", &paschke_rho);
    m.def("paschke_h", &paschke_h);

    m.def("ramanujan_classic", [](const Graph& g) {
        auto rep = ramanujan_classic(g);
        py::dict out;
        out["verdict"] = verdict_name(rep.verdict);
        out["threshold"] = py::make_tuple(rep.threshold_lo, rep.threshold_hi);
        out["k"] = rep.k;
        out["compared_eigenvalue"] = rep.compared_eigenvalue;
        return out;
    });
    m.def("ramanujan_degree_matrix",
          [](const Graph& g, const std::vector<VertexSet>& sets, const DegreeMatrix& d,
             bool equitable_mode) {
              auto rep = ramanujan_degree_matrix(g, sets, d, equitable_mode);
              py::dict out;
              out["verdict"] = verdict_name(rep.verdict);
              out["threshold"] = py::make_tuple(rep.threshold_lo, rep.threshold_hi);
              out["k"] = rep.k;
              out["k_determined"] = rep.k_determined;
              out["compared_eigenvalue"] = rep.compared_eigenvalue;
              out["d_spectrum"] = rep.d_spectrum;
              return out;
          },
          py::arg("g"), py::arg("sets"), py::arg("d"), py::arg("equitable_mode") = true);
    m.def("serre_verify", [](const Graph& g, int d, int delta_max, double eps) {
        auto rep = serre_verify(g, d, delta_max, eps);
        py::dict out;
        out["threshold"] = rep.threshold;
        out["count"] = rep.count;
        out["required"] = rep.required;
        out["pass"] = rep.pass;
        return out;
    });
    m.def("negative_side_verify", [](const Graph& g, int d, int delta_max) {
        auto rep = negative_side_verify(g, d, delta_max);
        py::dict out;
        out["applicable"] = rep.applicable;
        out["bipartite"] = rep.bipartite;
        out["threshold"] = rep.threshold;
        out["count"] = rep.count;
        out["required"] = rep.required;
        out["pass"] = rep.pass;
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
