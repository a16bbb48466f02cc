#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "balgraph/formats.hpp"
#include "balgraph/oracle.hpp"

namespace py = pybind11;
using namespace balgraph;

namespace {

py::int_ to_python(const BigInt& n) { return py::int_(py::module_::import("builtins").attr("int")(n.str())); }

// Group elements cross the boundary as tuples of residues; a plain int is
// accepted for single-factor groups.
GroupElement to_element(const FiniteAbelianGroup& A, const py::handle& value) {
    std::vector<std::int64_t> residues;
    if (py::isinstance<py::int_>(value))
        residues.push_back(value.cast<std::int64_t>());
    else
        for (auto item : value) residues.push_back(item.cast<std::int64_t>());
    if (residues.size() != A.rank())
        throw std::invalid_argument("expected " + std::to_string(A.rank()) + " residues per element");
    return A.element(std::move(residues));
}

py::tuple to_tuple(const GroupElement& a) { return py::tuple(py::cast(a.residues)); }

using IdMap = std::map<std::string, py::object>;

EdgeLabeling edges_from(const MultiGraph& g, const FiniteAbelianGroup& A, const py::dict& values) {
    EdgeLabeling f{std::vector<GroupElement>(g.edge_count())};
    std::vector<bool> set(g.edge_count(), false);
    for (auto [key, value] : values) {
        auto e = g.edge_index(key.cast<std::string>());
        f.values[e] = to_element(A, value);
        set[e] = true;
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (!set[e]) throw std::invalid_argument("edge '" + g.edge(e).id + "' has no value");
    return f;
}

VertexLabeling vertices_from(const MultiGraph& g, const FiniteAbelianGroup& A, const py::dict& values) {
    VertexLabeling gv{std::vector<GroupElement>(g.vertex_count())};
    std::vector<bool> set(g.vertex_count(), false);
    for (auto [key, value] : values) {
        auto v = g.vertex_index(key.cast<std::string>());
        gv.values[v] = to_element(A, value);
        set[v] = true;
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (!set[v]) throw std::invalid_argument("vertex '" + g.vertex_id(v) + "' has no value");
    return gv;
}

py::dict edges_to(const MultiGraph& g, const EdgeLabeling& f) {
    py::dict d;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) d[py::str(g.edge(e).id)] = to_tuple(f.values[e]);
    return d;
}

py::dict vertices_to(const MultiGraph& g, const VertexLabeling& gv) {
    py::dict d;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) d[py::str(g.vertex_id(v))] = to_tuple(gv.values[v]);
    return d;
}

std::vector<std::vector<std::string>> named(const MultiGraph& g, const Partition& p) {
    std::vector<std::vector<std::string>> out;
    for (const auto& block : p.blocks()) {
        out.emplace_back();
        for (auto v : block) out.back().push_back(g.vertex_id(v));
    }
    return out;
}

std::vector<std::string> edge_names(const MultiGraph& g, const EdgeSet& s) {
    std::vector<std::string> out;
    for (auto e : s.members()) out.push_back(g.edge(e).id);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Balanced labelings of multigraphs over finite Abelian groups";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

    py::class_<MultiGraph>(m, "Graph")
        .def_static("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"))
        .def_static("read", &read_graph_file, py::arg("path"))
        .def_property_readonly("vertices", &MultiGraph::vertex_ids)
        .def_property_readonly("edges",
                               [](const MultiGraph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& e : g.edges())
                                       out.emplace_back(e.id, g.vertex_id(e.u), g.vertex_id(e.w));
                                   return out;
                               })
        .def("to_text", [](const MultiGraph& g) { return to_text(g); })
        .def("__repr__", [](const MultiGraph& g) {
            return "<Graph |V|=" + std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<FiniteAbelianGroup>(m, "Group")
        .def(py::init([](const std::string& spec) { return parse_group(spec); }), py::arg("spec"))
        .def(py::init<std::vector<std::int64_t>>(), py::arg("moduli"))
        .def_property_readonly("moduli", &FiniteAbelianGroup::moduli)
        .def_property_readonly("order", [](const FiniteAbelianGroup& A) { return to_python(A.cardinality()); })
        .def("__repr__", [](const FiniteAbelianGroup& A) {
            std::string s;
            for (auto n : A.moduli()) s += (s.empty() ? "Z" : "xZ") + std::to_string(n);
            return "<Group " + s + ">";
        });

    m.def("k_edge_classes", [](const MultiGraph& g, std::size_t k) { return named(g, k_edge_classes(g, k)); },
          py::arg("graph"), py::arg("k"));
    m.def("cycle_basis",
          [](const MultiGraph& g) {
              std::vector<std::vector<std::string>> out;
              for (const auto& c : cycle_space_basis(g)) out.push_back(edge_names(g, c.edges));
              return out;
          },
          py::arg("graph"));
    m.def("weak_cycle_space_dim", [](const MultiGraph& g, std::size_t k) { return weak_cycle_space(g, k).dim; },
          py::arg("graph"), py::arg("k"));

    py::class_<BalanceFrame>(m, "Frame", "Basis extension and solvers for one graph, built once and reused.")
        .def(py::init<MultiGraph>(), py::arg("graph"))
        .def_property_readonly("con", &BalanceFrame::con)
        .def_property_readonly("con3", &BalanceFrame::con3)
        .def("structure",
             [](const BalanceFrame& f, const std::string& which) {
                 return to_string(f.group_structure(parse_labeling_kind(which)));
             },
             py::arg("which"))
        .def("count",
             [](const BalanceFrame& f, const FiniteAbelianGroup& A, const std::string& which) {
                 return to_python(f.count_balanced(A, parse_labeling_kind(which)));
             },
             py::arg("group"), py::arg("which"))
        .def("is_balanced",
             [](const BalanceFrame& f, const FiniteAbelianGroup& A, const py::dict& edges,
                const std::optional<py::dict>& vertices) {
                 const auto& g = f.graph();
                 if (!vertices) return f.is_balanced_edges(A, edges_from(g, A, edges));
                 return f.is_balanced_full(A, FullLabeling{vertices_from(g, A, *vertices), edges_from(g, A, edges)});
             },
             py::arg("group"), py::arg("edges"), py::arg("vertices") = py::none())
        .def("is_balanceable",
             [](const BalanceFrame& f, const FiniteAbelianGroup& A, const py::dict& vertices) {
                 return f.is_balanceable(A, vertices_from(f.graph(), A, vertices));
             },
             py::arg("group"), py::arg("vertices"))
        .def("balance",
             [](const BalanceFrame& f, const FiniteAbelianGroup& A, const py::dict& vertices) -> py::object {
                 auto result = f.balance(A, vertices_from(f.graph(), A, vertices));
                 if (!result) return py::none();
                 return edges_to(f.graph(), *result);
             },
             py::arg("group"), py::arg("vertices"))
        .def("xi",
             [](const BalanceFrame& f, const FiniteAbelianGroup& A, const py::dict& vertices, const py::dict& edges) {
                 const auto& g = f.graph();
                 auto c = f.xi(A, FullLabeling{vertices_from(g, A, vertices), edges_from(g, A, edges)});
                 py::dict reps, forest;
                 py::list shorts;
                 for (std::size_t i = 0; i < c.reps.size(); ++i)
                     reps[py::str(g.vertex_id(f.basis().reps[i]))] = to_tuple(c.reps[i]);
                 for (std::size_t i = 0; i < c.forest.size(); ++i)
                     forest[py::str(g.edge(f.basis().forest_edges[i]).id)] = to_tuple(c.forest[i]);
                 for (const auto& s : c.shorts) shorts.append(to_tuple(s));
                 py::dict out;
                 out["reps"] = reps;
                 out["forest"] = forest;
                 out["shorts"] = shorts;
                 return out;
             },
             py::arg("group"), py::arg("vertices"), py::arg("edges"))
        .def("xi_inv",
             [](const BalanceFrame& f, const FiniteAbelianGroup& A, const py::dict& coords) {
                 const auto& g = f.graph();
                 const auto& b = f.basis();
                 FullCoordinates c;
                 py::dict reps = coords["reps"], forest = coords["forest"];
                 py::list shorts = coords["shorts"];
                 for (auto w : b.reps) c.reps.push_back(to_element(A, reps[py::str(g.vertex_id(w))]));
                 for (auto e : b.forest_edges) c.forest.push_back(to_element(A, forest[py::str(g.edge(e).id)]));
                 for (auto s : shorts) c.shorts.push_back(to_element(A, s));
                 auto h = f.xi_inv(A, c);
                 return py::make_tuple(vertices_to(g, h.vertices), edges_to(g, h.edges));
             },
             py::arg("group"), py::arg("coords"));

    m.def("oracle_count",
          [](const MultiGraph& g, const FiniteAbelianGroup& A, const std::string& which) {
              return oracle_count_balanced(g, A, parse_labeling_kind(which));
          },
          py::arg("graph"), py::arg("group"), py::arg("which"));
    m.def("oracle_is_balanced",
          [](const MultiGraph& g, const FiniteAbelianGroup& A, const py::dict& edges, const std::optional<py::dict>& vertices) {
              if (!vertices) return oracle_is_balanced(g, A, edges_from(g, A, edges));
              return oracle_is_balanced(g, A, FullLabeling{vertices_from(g, A, *vertices), edges_from(g, A, edges)});
          },
          py::arg("graph"), py::arg("group"), py::arg("edges"), py::arg("vertices") = py::none());
}
