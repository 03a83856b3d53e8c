#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vdec/colorer.hpp"
#include "vdec/enumerate.hpp"
#include "vdec/exact.hpp"
#include "vdec/io.hpp"
#include "vdec/reducer.hpp"
#include "vdec/survey.hpp"
#include "vdec/verify.hpp"

#include <sstream>

namespace py = pybind11;
using namespace vdec;

namespace {

SimpleGraph graph_from_pairs(int p, const std::vector<std::pair<int, int>>& edges) {
    return SimpleGraph::build(p, edges);
}

std::map<std::pair<int, int>, int> assignment_dict(const EdgeColoring& c) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [e, color] : c.assignment) out[{e.u, e.v}] = color;
    return out;
}

EdgeColoring coloring_from_dict(int palette, const std::map<std::pair<int, int>, int>& d) {
    EdgeColoring c;
    c.palette = palette;
    for (const auto& [pair, color] : d) c.assignment[Edge(pair.first, pair.second)] = color;
    return c;
}

py::dict row_to_dict(const SurveyRow& row) {
    py::dict d;
    d["canonical_id"] = row.canonical_id;
    d["p"] = row.p;
    d["q"] = row.q;
    d["n1"] = row.n1;
    d["n2"] = row.n2;
    d["D"] = row.D;
    d["k_lower"] = row.k_lower;
    d["chi_exact"] = row.chi_exact ? py::cast(*row.chi_exact) : py::none();
    d["chi_predicted"] = row.chi_predicted ? py::cast(*row.chi_predicted) : py::none();
    d["chi_es_exact"] = row.chi_es_exact ? py::cast(*row.chi_es_exact) : py::none();
    d["flags"] = row.flags;
    return d;
}

} // namespace

PYBIND11_MODULE(_vdec, m) {
    m.doc() = "vertex-distinguishing edge colorings of trees: constructions, exact search, "
              "bounds and enumeration";

    py::register_exception<Error>(m, "VdecError");

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def_property_readonly("p", &SimpleGraph::vertex_count)
        .def_property_readonly("q", &SimpleGraph::edge_count)
        .def("degree", &SimpleGraph::degree)
        .def("neighbors", &SimpleGraph::neighbors)
        .def("has_edge", &SimpleGraph::has_edge)
        .def_property_readonly("edges",
                               [](const SimpleGraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("__repr__", [](const SimpleGraph& g) {
            std::ostringstream s;
            s << "SimpleGraph(p=" << g.vertex_count() << ", q=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<Tree>(m, "Tree")
        .def_property_readonly("graph", [](const Tree& t) { return t.graph; })
        .def_property_readonly("p", &Tree::p)
        .def_property_readonly("q", &Tree::q)
        .def_property_readonly("n1", &Tree::n1)
        .def_property_readonly("n2", &Tree::n2)
        .def_property_readonly("diameter", [](const Tree& t) { return t.diameter; })
        .def_property_readonly("degree_counts", [](const Tree& t) { return t.profile.counts; })
        .def("__repr__", [](const Tree& t) {
            std::ostringstream s;
            s << "Tree(p=" << t.p() << ", D=" << t.diameter << ", n1=" << t.n1()
              << ", n2=" << t.n2() << ")";
            return s.str();
        });

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init(&coloring_from_dict), py::arg("palette"), py::arg("assignment"))
        .def_property_readonly("palette", [](const EdgeColoring& c) { return c.palette; })
        .def_property_readonly("assignment", &assignment_dict)
        .def_property_readonly("color_count", &EdgeColoring::color_count)
        .def("__repr__", [](const EdgeColoring& c) {
            std::ostringstream s;
            s << "EdgeColoring(palette=" << c.palette << ", edges=" << c.assignment.size() << ")";
            return s.str();
        });

    m.def("build_graph", &graph_from_pairs, py::arg("p"), py::arg("edges"),
          "Validated simple graph from an edge list.");
    m.def("as_tree", &as_tree, py::arg("graph"));
    m.def("degree_profile", [](const SimpleGraph& g) { return degree_profile(g).counts; });
    m.def("diameter", [](const Tree& t) { return t.diameter; });
    m.def("classify_tree",
          [](const Tree& t) { return shape_to_string(classify_tree(t)); });
    m.def("canonical_id", [](const Tree& t) { return canonical_id(t); });

    m.def(
        "verify",
        [](const SimpleGraph& g, const EdgeColoring& c) {
            VdecReport r = verify(g, c);
            py::dict d;
            d["proper"] = r.proper;
            d["distinguishing"] = r.distinguishing;
            d["equitable"] = r.equitable;
            d["colors_used"] = r.colors_used;
            d["violation"] = r.violation ? py::cast(violation_to_string(*r.violation)) : py::none();
            return d;
        },
        py::arg("graph"), py::arg("coloring"));
    m.def("color_set", &color_set, py::arg("graph"), py::arg("coloring"), py::arg("vertex"));
    m.def(
        "conjecture_lower_bound",
        [](const SimpleGraph& g) { return conjecture_lower_bound(degree_profile(g)); },
        py::arg("graph"));

    m.def(
        "exact_chi_s",
        [](const SimpleGraph& g, int max_palette, long long budget) {
            SolverConfig cfg;
            cfg.max_palette = max_palette;
            cfg.node_budget = budget;
            ExactResult r = exact_chi_s(g, cfg);
            return py::make_tuple(r.chi, r.witness, r.nodes_explored);
        },
        py::arg("graph"), py::arg("max_palette") = 0, py::arg("budget") = 100'000'000LL);
    m.def(
        "exact_chi_es",
        [](const SimpleGraph& g, int max_palette, long long budget) {
            SolverConfig cfg;
            cfg.max_palette = max_palette;
            cfg.node_budget = budget;
            ExactResult r = exact_chi_es(g, cfg);
            return py::make_tuple(r.chi, r.witness, r.nodes_explored);
        },
        py::arg("graph"), py::arg("max_palette") = 0, py::arg("budget") = 100'000'000LL);
    m.def("count_vdecs", &count_vdecs, py::arg("graph"), py::arg("palette"),
          py::arg("budget") = 100'000'000LL);

    m.def(
        "predict_chi_s",
        [](const Tree& t) {
            ChiPrediction p = predict_chi_s(t);
            return py::make_tuple(p.value, regime_name(p.regime));
        },
        py::arg("tree"));
    m.def(
        "color_tree", [](const Tree& t) { return color_tree(t); }, py::arg("tree"));
    m.def("color_double_star", &color_double_star, py::arg("m"), py::arg("n"));
    m.def(
        "color_diam4",
        [](int r, int m, const std::vector<int>& legs) {
            return color_diam4(DiamFour{r, m, legs, 0});
        },
        py::arg("r"), py::arg("m"), py::arg("legs"));
    m.def("find_balancing_vertex", &find_balancing_vertex, py::arg("tree"));
    m.def("equitable_finish", &equitable_finish, py::arg("tree"), py::arg("coloring"));

    m.def(
        "cor1_bound",
        [](const SimpleGraph& g) -> py::object {
            auto b = cor1_bound(g);
            return b ? py::cast(*b) : py::none();
        },
        py::arg("graph"));
    m.def(
        "bound_report",
        [](const SimpleGraph& g) {
            BoundReport r = bound_report(g);
            py::dict d;
            d["cor1_bound"] = r.cor1_bound ? py::cast(*r.cor1_bound) : py::none();
            d["cor1_raised"] = r.cor1_raised;
            d["cor2_bound"] = r.cor2_bound;
            d["cotree_colors"] = r.cotree_colors;
            d["tree_chi"] = r.tree_chi;
            return d;
        },
        py::arg("graph"));

    m.def("enumerate_trees", &enumerate_trees, py::arg("n"));
    m.def("prufer_tree_count", &prufer_tree_count, py::arg("n"));
    m.def("build_star", &build_star, py::arg("leaves"));
    m.def("build_double_star", &build_double_star, py::arg("m"), py::arg("n"));
    m.def("build_diam_four", &build_diam_four, py::arg("r"), py::arg("m"), py::arg("legs"));
    m.def("build_path", &build_path, py::arg("p"));

    m.def(
        "survey_tree", [](const Tree& t) { return row_to_dict(survey_tree(t)); }, py::arg("tree"));

    m.def("relabel_consecutive", &relabel_consecutive, py::arg("coloring"));

#ifdef VERSION_INFO
#define VDEC_STR2(x) #x
#define VDEC_STR(x) VDEC_STR2(x)
    m.attr("__version__") = VDEC_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
