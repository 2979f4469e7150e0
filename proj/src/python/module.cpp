#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclegraph/audit.hpp"
#include "cyclegraph/formulas.hpp"
#include "cyclegraph/gamma.hpp"
#include "cyclegraph/invariants.hpp"
#include "cyclegraph/render.hpp"

namespace py = pybind11;
using namespace cyclegraph;

namespace {

py::object opt_to_py(const std::optional<int>& v, const char* sentinel) {
    if (v) return py::int_(*v);
    return py::str(sentinel);
}

py::dict summary_to_dict(const InvariantSummary& s) {
    py::dict d;
    d["vertex_count"] = s.vertex_count;
    d["edge_count"] = s.edge_count;
    d["degree_sequence"] = s.degree_sequence;
    d["min_degree"] = s.min_degree;
    d["max_degree"] = s.max_degree;
    d["pendant_count"] = s.pendant_count;
    d["connected"] = s.connected;
    d["diameter"] = opt_to_py(s.diameter, "disconnected");
    d["girth"] = opt_to_py(s.girth, "inf");
    d["bipartite"] = s.bipartite;
    d["tree"] = s.tree;
    d["regular"] = s.regular;
    d["eulerian"] = s.eulerian;
    d["path_graph"] = s.path_graph;
    d["cycle_graph"] = s.cycle_graph;
    d["star_graph"] = s.star_graph;
    d["complete_graph"] = s.complete_graph;
    return d;
}

Mat2 to_mat2(const std::array<long long, 4>& raw) { return Mat2{raw[0], raw[1], raw[2], raw[3]}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cyclic subgroup graphs of finite groups: builders, invariants, and the "
              "closed-form audit";

    py::class_<Subgroup>(m, "Subgroup")
        .def_readonly("elements", &Subgroup::elements)
        .def_readonly("order", &Subgroup::order)
        .def_readonly("generator", &Subgroup::generator)
        .def("__repr__", [](const Subgroup& h) {
            return "<Subgroup order " + std::to_string(h.order) + ">";
        });

    py::class_<Group>(m, "Group")
        .def_property_readonly("order", [](const Group& g) { return g.order; })
        .def_property_readonly("descriptor", [](const Group& g) { return g.family.name(); })
        .def_property_readonly("element_orders", [](const Group& g) { return g.element_orders; })
        .def("multiply", [](const Group& g, int a, int b) {
            if (a < 0 || a >= g.order || b < 0 || b >= g.order)
                throw py::index_error("element id out of range");
            return g.mul(a, b);
        })
        .def("__repr__", [](const Group& g) {
            return "<Group " + g.family.name() + " of order " + std::to_string(g.order) + ">";
        });

    py::class_<GammaGraph>(m, "GammaGraph")
        .def_readonly("vertices", &GammaGraph::vertices)
        .def_readonly("edges", &GammaGraph::edges)
        .def_readonly("parent_order", &GammaGraph::parent_order)
        .def_property_readonly("labels", [](const GammaGraph& g) { return vertex_labels(g); })
        .def("__repr__", [](const GammaGraph& g) {
            return "<GammaGraph " + std::to_string(g.vertices.size()) + " vertices, " +
                   std::to_string(g.edges.size()) + " edges>";
        });

    m.def("factorize", [](long long n) {
        std::vector<std::pair<long long, int>> out;
        for (const auto& pp : factorize(n).factors) out.emplace_back(pp.prime, pp.exponent);
        return out;
    });
    m.def("is_prime", &is_prime);

    m.def("cyclic", &make_cyclic, py::arg("n"));
    m.def("dihedral", &make_dihedral, py::arg("n"));
    m.def("generalized_quaternion", &make_generalized_quaternion, py::arg("n"));
    m.def("dicyclic", &make_dicyclic, py::arg("n"));
    m.def("direct_product", &make_direct_product, py::arg("parts"));
    m.def("minimal_noncyclic", &make_minimal_noncyclic, py::arg("p"), py::arg("r"), py::arg("q"));
    m.def("find_conjugation_exponent", &find_conjugation_exponent, py::arg("p"), py::arg("q"));
    m.def("from_cayley_table", &from_cayley_table, py::arg("table"));
    m.def("load_cayley_table", &load_cayley_table, py::arg("path"));
    m.def(
        "from_matrix_generators",
        [](long long modulus, const std::vector<std::array<long long, 4>>& gens, int cap) {
            std::vector<Mat2> mats;
            for (const auto& raw : gens) mats.push_back(to_mat2(raw));
            return from_matrix_generators(modulus, mats, cap);
        },
        py::arg("modulus"), py::arg("generators"), py::arg("closure_cap") = 5000);

    m.def("element_order", &element_order, py::arg("group"), py::arg("element"));
    m.def("cyclic_subgroups", &cyclic_subgroups, py::arg("group"));
    m.def("all_subgroups", &all_subgroups, py::arg("group"));
    m.def("is_nilpotent", &is_nilpotent, py::arg("group"));
    m.def("count_subgroups_of_order", &count_subgroups_of_order, py::arg("group"),
          py::arg("order"));

    m.def("build_gamma", &build_gamma, py::arg("group"));
    m.def("summarize", [](const GammaGraph& gamma) { return summary_to_dict(summarize(gamma)); });
    m.def(
        "distance",
        [](const GammaGraph& gamma, int u, int v) -> py::object {
            auto d = distance(gamma, u, v);
            if (d) return py::int_(*d);
            return py::none();
        },
        py::arg("gamma"), py::arg("u"), py::arg("v"));

    m.def("render_dot", &render_dot, py::arg("gamma"), py::arg("name") = "gamma");
    m.def("render_json", [](const Group& g) {
        GammaGraph gamma = build_gamma(g);
        return render_json(g, gamma, summarize(gamma));
    });

    m.def("known_discrepancies", [] {
        py::list out;
        for (const auto& d : audit::known_discrepancies()) {
            py::dict e;
            e["id"] = d.id;
            e["location"] = d.location;
            e["stated"] = d.stated_expr;
            e["evidence"] = d.evidence_expr;
            e["note"] = d.evidence_note;
            out.append(e);
        }
        return out;
    });
    m.def(
        "audit_preset_json",
        [](const std::string& name) {
            return audit::report_to_json(audit::run_audit(audit::corpus_preset(name)));
        },
        py::arg("name"));
    m.def(
        "audit_file_json",
        [](const std::string& path) {
            return audit::report_to_json(audit::run_audit(audit::parse_corpus_file(path)));
        },
        py::arg("path"));
}
