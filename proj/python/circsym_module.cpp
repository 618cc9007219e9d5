#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circsym/symparams.hpp"

namespace py = pybind11;
using namespace circsym;

namespace {

CirculantSpec spec_of(int n, int i, int j) { return normalize(n, i, j); }

SubdividedSpec sub_of(int n, int i, int j, const std::string& arc, int p) {
    return make_subdivided(normalize(n, i, j), arc == "i" ? Arc::I : Arc::J, p);
}

py::dict report_dict(const SymmetryReport& r) {
    py::dict out;
    out["det"] = r.det;
    out["dist"] = r.dist;
    out["cost"] = r.cost ? py::object(py::int_(*r.cost)) : py::none();
    out["method"] = r.method == Method::ClosedForm ? "closed_form" : "search";
    if (r.det_witness) out["det_witness"] = *r.det_witness;
    if (r.cost_witness) out["cost_witness"] = *r.cost_witness;
    if (r.dist_witness) out["dist_witness"] = *r.dist_witness;
    return out;
}

}  // namespace

PYBIND11_MODULE(_circsym, m) {
    m.doc() = "two-generator circulant graphs: automorphism groups and symmetry parameters";

    py::register_exception<invalid_spec_error>(m, "InvalidSpecError", PyExc_ValueError);
    py::register_exception<wrong_regime_error>(m, "WrongRegimeError", PyExc_ValueError);
    py::register_exception<budget_exceeded_error>(m, "BudgetExceededError", PyExc_RuntimeError);

    m.def("normalize", [](int n, int i, int j) {
        CirculantSpec s = spec_of(n, i, j);
        return py::make_tuple(s.n, s.i, s.j);
    });
    m.def("is_connected", [](int n, int i, int j) { return spec_of(n, i, j).connected(); });
    m.def("units", [](int n) { return units(n).elements; });
    m.def("symbol_stabilizer", [](int n, int i, int j) {
        auto st = symbol_stabilizer(n, i, j);
        return py::make_tuple(st.h, st.h_prime);
    });
    m.def("special_conditions", [](int n, int i, int j) { return special_conditions(n, i, j).names(); });
    m.def("is_edge_transitive", [](int n, int i, int j) { return is_edge_transitive(spec_of(n, i, j)); });
    m.def("twin_class", [](int n, int i, int j) {
        return twin_variant_name(twin_classification(spec_of(n, i, j)).variant);
    });
    m.def("edges", [](int n, int i, int j) { return build_circulant(spec_of(n, i, j)).edges(); });
    m.def("dot", [](int n, int i, int j) { return build_circulant(spec_of(n, i, j)).to_dot(); });

    m.def("aut_order", [](int n, int i, int j) { return group_order(spec_of(n, i, j)); });
    m.def(
        "aut_order_subdivided",
        [](int n, int i, int j, const std::string& arc, int p) { return group_order(sub_of(n, i, j, arc, p)); },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("arc") = "i", py::arg("p") = 1);
    m.def("brute_aut_order", [](int n, int i, int j) {
        return brute_automorphisms(build_circulant(spec_of(n, i, j))).order;
    });

    m.def("closed_form_params",
          [](int n, int i, int j) { return report_dict(closed_form_params(spec_of(n, i, j))); });
    m.def(
        "closed_form_params_subdivided",
        [](int n, int i, int j, const std::string& arc, int p) {
            return report_dict(closed_form_params(sub_of(n, i, j, arc, p)));
        },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("arc") = "i", py::arg("p") = 1);
    m.def("search_params", [](int n, int i, int j) {
        Graph g = build_circulant(spec_of(n, i, j));
        return report_dict(search_params(g, brute_automorphisms(g).perms));
    });
    m.def(
        "search_params_subdivided",
        [](int n, int i, int j, const std::string& arc, int p) {
            Graph g = build_subdivided(sub_of(n, i, j, arc, p));
            return report_dict(search_params(g, brute_automorphisms(g).perms));
        },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("arc") = "i", py::arg("p") = 1);

    m.def("verify", [](int n, int i, int j) { return verify_spec(spec_of(n, i, j)).match; });
    m.def(
        "verify_subdivided",
        [](int n, int i, int j, const std::string& arc, int p) {
            return verify_spec(sub_of(n, i, j, arc, p)).match;
        },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("arc") = "i", py::arg("p") = 1);
    m.def("dist_from_quotient", &dist_from_quotient);
    m.def("scan_double_special_conditions", [](int n_max) {
        std::vector<py::tuple> out;
        for (const auto& s : scan_double_special_conditions(n_max))
            out.push_back(py::make_tuple(s.n, s.i, s.j));
        return out;
    });
}
