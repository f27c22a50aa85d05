#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>

#include "specfac/factor.hpp"
#include "specfac/families.hpp"
#include "specfac/graph6.hpp"
#include "specfac/rng.hpp"
#include "specfac/spectral.hpp"
#include "specfac/thresholds.hpp"
#include "specfac/verify.hpp"

namespace py = pybind11;
using namespace specfac;

namespace {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

VertexSet list_to_set(const std::vector<int>& verts) {
    VertexSet s = 0;
    for (int v : verts) {
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
        s |= VertexSet{1} << v;
    }
    return s;
}

Partition partition_from_lists(const std::vector<std::vector<int>>& blocks) {
    Partition pi;
    for (const auto& b : blocks) pi.blocks.push_back(list_to_set(b));
    return pi;
}

std::vector<std::vector<double>> matrix_to_lists(const SymMatrix& m) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
        out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.dim()));
        for (int j = 0; j < m.dim(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    }
    return out;
}

py::object violation_to_py(const std::optional<Violation>& v) {
    if (!v) return py::none();
    py::dict d;
    d["kind"] = violation_kind_name(v->kind);
    d["s"] = set_to_list(v->s);
    d["isolated"] = v->isolated;
    d["bound"] = v->bound;
    return d;
}

CaseId case_from_name(const std::string& name) {
    if (name == "B0" || name == "b0") return CaseId::B0;
    if (name == "B1" || name == "b1") return CaseId::B1;
    if (name == "B2" || name == "b2") return CaseId::B2;
    if (name == "B3" || name == "b3") return CaseId::B3;
    if (name == "B4" || name == "b4") return CaseId::B4;
    throw std::invalid_argument("unknown case id: " + name);
}

py::dict family_to_py(const FamilyInstance& f) {
    py::dict d;
    d["graph"] = f.graph;
    py::list blocks;
    for (VertexSet b : f.partition.blocks) blocks.append(set_to_list(b));
    d["blocks"] = blocks;
    d["family"] = f.meta.family;
    d["n"] = f.meta.n;
    d["s"] = f.meta.s;
    d["n1"] = f.meta.n1;
    d["t"] = f.meta.t;
    return d;
}

}  // namespace

PYBIND11_MODULE(_specfac, m) {
    m.doc() = "A_alpha spectral radii and path-factor coverage of small graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return set_to_list(g.neighbors(v)); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(graph6='" + graph6_encode(g) + "')"; });

    m.def("complete", &complete, py::arg("n"));
    m.def("empty_graph", &empty_graph, py::arg("n"));
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("disjoint_union", &disjoint_union);
    m.def("join", &join);
    m.def("sequential_join",
          [](const std::vector<Graph>& parts) { return sequential_join(parts); });
    m.def("complement", &complement);
    m.def("induced_delete",
          [](const Graph& g, const std::vector<int>& s) { return induced_delete(g, list_to_set(s)); });
    m.def("isolated_count", &isolated_count);
    m.def("connected_components", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (VertexSet c : connected_components(g)) out.push_back(set_to_list(c));
        return out;
    });
    m.def("is_connected", &is_connected);
    m.def("graph6_encode", &graph6_encode);
    m.def("graph6_decode", [](const std::string& text) { return graph6_decode(text); });

    m.def("a_alpha", [](const Graph& g, double alpha) { return matrix_to_lists(a_alpha(g, alpha)); });
    m.def("eigenvalues", [](const Graph& g, double alpha) { return eigenvalues(a_alpha(g, alpha)); });
    m.def("spectral_radius", [](const Graph& g, double alpha) { return spectral_radius(a_alpha(g, alpha)); });
    m.def("is_equitable", [](const Graph& g, const std::vector<std::vector<int>>& blocks) {
        return is_equitable(g, partition_from_lists(blocks));
    });
    m.def("quotient", [](const Graph& g, double alpha, const std::vector<std::vector<int>>& blocks) {
        const QuotientMatrix q = quotient(g, alpha, partition_from_lists(blocks));
        std::vector<std::vector<double>> out(static_cast<std::size_t>(q.dim));
        for (int i = 0; i < q.dim; ++i)
            for (int j = 0; j < q.dim; ++j) out[static_cast<std::size_t>(i)].push_back(q(i, j));
        return out;
    });
    m.def("quotient_largest_eig",
          [](const Graph& g, double alpha, const std::vector<std::vector<int>>& blocks) {
              return quotient_largest_eig(quotient(g, alpha, partition_from_lists(blocks)));
          });

    m.def("cubic_roots", [](double c3, double c2, double c1, double c0) {
        return real_roots(Cubic{c3, c2, c1, c0});
    });
    m.def("f_alpha", &f_alpha);
    m.def("eta", &eta, py::arg("n"), py::arg("alpha"));
    m.def("theta", &theta, py::arg("n"), py::arg("alpha"));
    m.def("threshold_in_domain", &threshold_in_domain);
    m.def("case_char_poly", [](const std::string& case_id, int n, int s, double alpha) {
        const CharPoly p = case_char_poly(case_from_name(case_id), n, s, alpha);
        if (const auto* c = std::get_if<Cubic>(&p)) return std::vector<double>{c->c3, c->c2, c->c1, c->c0};
        const auto& q = std::get<Quadratic>(p);
        return std::vector<double>{q.c2, q.c1, q.c0};
    });
    m.def("audit_inequalities", [](int n, double alpha) {
        py::list out;
        for (const auto& a : audit_inequalities(n, alpha)) {
            py::dict d;
            d["claim"] = a.claim;
            d["n"] = a.n;
            d["s"] = a.s;
            d["alpha"] = a.alpha;
            d["value"] = a.value;
            d["assert"] = sign_name(a.sign);
            d["pass"] = a.pass;
            out.append(d);
        }
        return out;
    });

    m.def("deficiency_check", [](const Graph& g) { return violation_to_py(deficiency_check(g)); });
    m.def("has_p2_factor", [](const Graph& g) {
        const P2FactorResult r = has_p2_factor(g);
        py::object witness = py::none();
        if (r.witness) witness = py::cast(r.witness->paths);
        return py::make_tuple(r.exists, witness);
    });
    m.def("is_covered_structural",
          [](const Graph& g) { return violation_to_py(is_covered_structural(g)); });
    m.def("is_covered_direct", &is_covered_direct);

    m.def("claim1_graph", [](int n) { return family_to_py(claim1_graph(n)); });
    m.def("extremal_graph", [](int n) { return family_to_py(extremal_graph(n)); });
    m.def("case_graph", [](const std::string& case_id, int n, int s) {
        return family_to_py(case_graph(case_from_name(case_id), n, s));
    });

    m.def("random_connected_graph", [](int n, double p, std::uint64_t seed) {
        SplitMix64 rng(seed);
        return random_connected_graph(n, p, rng);
    });

    m.attr("__version__") = "0.1.0";
}
