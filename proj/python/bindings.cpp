// Python bindings for the main operations.  Structured inputs (algebra
// tables, PDEs, function bundles) cross the boundary as JSON strings with
// the same schemas the CLI accepts; numeric data crosses as lists of
// complex numbers.
#include "monocalc/io.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace monocalc;

namespace {

CartanTable table_from_str(const std::string& s) { return table_from_json(Json::parse(s)); }

PdeSpec pde_from_str(const std::string& s) {
    if (s == "laplace") return PdeSpec::laplace();
    return pde_from_json(Json::parse(s));
}

VarTriple make_triple(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return VarTriple{a, b};
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["op"] = r.op;
    d["h"] = r.h;
    d["tol"] = r.tol;
    d["max_residual"] = r.max_residual;
    d["pass"] = r.pass;
    d["points"] = r.points;
    d["seed"] = r.seed;
    return d;
}

} // namespace

PYBIND11_MODULE(_monocalc, mod) {
    mod.doc() = "monogenic-function calculus in finite-dimensional commutative algebras";

    py::class_<CartanTable>(mod, "CartanTable")
        .def_readonly("n", &CartanTable::n)
        .def_readonly("m", &CartanTable::m)
        .def("__repr__", [](const CartanTable& t) {
            return "<CartanTable n=" + std::to_string(t.n) + " m=" + std::to_string(t.m) + ">";
        });

    py::class_<VarTriple>(mod, "Triple")
        .def(py::init(&make_triple), py::arg("a"), py::arg("b"))
        .def_readonly("a", &VarTriple::a)
        .def_readonly("b", &VarTriple::b);

    py::class_<MonogenicFn>(mod, "MonogenicFn")
        .def_property_readonly("table", [](const MonogenicFn& f) { return f.table; })
        .def_property_readonly("triple", [](const MonogenicFn& f) { return f.triple; });

    mod.def("preset_table", &preset_table, py::arg("name"),
            "built-in multiplication table: A32 | B | A53 | A4");
    mod.def("preset_names", &preset_names);
    mod.def("table_from_json", &table_from_str, py::arg("json"));
    mod.def("table_to_json",
            [](const CartanTable& t) { return table_to_json(t).dump(); });

    mod.def("validate_table", [](const CartanTable& t) {
        std::vector<std::string> msgs;
        for (const auto& v : validate_table(t)) msgs.push_back(v.message);
        return msgs;
    });

    mod.def(
        "mul",
        [](const CartanTable& t, const std::vector<Complex>& a, const std::vector<Complex>& b) {
            return mul(a, b, t);
        },
        py::arg("table"), py::arg("a"), py::arg("b"));

    mod.def(
        "invert",
        [](const CartanTable& t, const std::vector<Complex>& a) {
            auto res = invert(a, t);
            if (!res.value)
                throw py::value_error("element is not invertible (f_" +
                                      std::to_string(res.offending_u) + " vanishes)");
            return *res.value;
        },
        py::arg("table"), py::arg("a"));

    mod.def(
        "char_system",
        [](const CartanTable& t, const std::string& pde, int project) {
            auto p = pde_from_str(pde);
            auto sys = project > 0 ? projected_char_system(t, p, project)
                                   : symbolic_char_expand(t, p);
            std::vector<std::string> eqs;
            for (const auto& e : sys.equations) eqs.push_back(e.str(sys.n));
            return eqs;
        },
        py::arg("table"), py::arg("pde") = "laplace", py::arg("project") = 0);

    mod.def(
        "check_triple",
        [](const CartanTable& t, const VarTriple& triple) {
            auto c = check_triple(t, triple);
            py::dict d;
            d["independent"] = c.independent;
            d["surjective"] = c.surjective;
            return d;
        },
        py::arg("table"), py::arg("triple"));

    mod.def(
        "verify_reduced_triples",
        [](const CartanTable& t, const std::string& pde, const VarTriple& triple, double tol) {
            auto rep = verify_reduced_triples(t, pde_from_str(pde), triple, tol);
            py::dict d;
            d["hypothesis_ok"] = rep.hypothesis_ok;
            std::vector<double> per_u;
            bool ok = rep.hypothesis_ok;
            for (const auto& res : rep.residuals) {
                double rn = elem_norm(res);
                per_u.push_back(rn);
                ok = ok && rn <= tol;
            }
            d["residuals"] = per_u;
            d["pass"] = ok;
            return d;
        },
        py::arg("table"), py::arg("pde"), py::arg("triple"), py::arg("tol") = 1e-10);

    mod.def(
        "reduced_independence",
        [](const CartanTable& t, const VarTriple& triple, int u) {
            auto r = reduced_independence(t, triple, u);
            py::dict d;
            d["branch"] = r.branch;
            d["independent"] = r.independent;
            return d;
        },
        py::arg("table"), py::arg("triple"), py::arg("u"));

    mod.def("preset_triple", &preset_triple, py::arg("name"));
    mod.def("preset_bundle", &preset_bundle, py::arg("name"));
    mod.def(
        "bundle_from_json",
        [](const std::string& json, const CartanTable& t, const VarTriple& triple) {
            return bundle_from_json(Json::parse(json), t, triple);
        },
        py::arg("json"), py::arg("table"), py::arg("triple"));

    mod.def(
        "eval",
        [](const MonogenicFn& fn, double x, double y, double z) {
            return eval_monogenic(fn, Point3{x, y, z});
        },
        py::arg("fn"), py::arg("x"), py::arg("y"), py::arg("z"));

    mod.def(
        "eval_closed_form",
        [](const std::string& preset, const MonogenicFn& fn, double x, double y, double z) {
            return eval_closed_form(preset, fn, Point3{x, y, z});
        },
        py::arg("preset"), py::arg("fn"), py::arg("x"), py::arg("y"), py::arg("z"));

    mod.def(
        "verify_monogenic",
        [](const MonogenicFn& fn, int grid, unsigned seed, double h, double tol) {
            FdConfig cfg;
            cfg.h = h;
            cfg.tol = tol;
            auto points = sample_points(grid, seed, fn.table, fn.triple);
            auto rep = check_monogenic(fn, points, cfg);
            rep.seed = seed;
            return report_dict(rep);
        },
        py::arg("fn"), py::arg("grid") = 100, py::arg("seed") = 20240901u, py::arg("h") = 1e-3,
        py::arg("tol") = 1e-5);

    mod.def(
        "pde_residual",
        [](const MonogenicFn& fn, const std::string& pde, int grid, unsigned seed, double h,
           double tol) {
            FdConfig cfg;
            cfg.h = h;
            cfg.tol = tol;
            auto points = sample_points(grid, seed, fn.table, fn.triple);
            auto rep = pde_residual(fn, pde_from_str(pde), points, cfg);
            rep.seed = seed;
            return report_dict(rep);
        },
        py::arg("fn"), py::arg("pde") = "laplace", py::arg("grid") = 100,
        py::arg("seed") = 20240901u, py::arg("h") = 1e-3, py::arg("tol") = 1e-2);

    mod.def(
        "verify_decomposition",
        [](const MonogenicFn& fn, int grid, unsigned seed, double tol) {
            auto points = sample_points(grid, seed, fn.table, fn.triple);
            auto rep = verify_decomposition(fn, points, tol);
            rep.summary.seed = seed;
            py::dict d = report_dict(rep.summary);
            py::list per_u;
            for (const auto& det : rep.per_u) {
                py::dict e;
                e["u"] = det.u;
                e["max_residual"] = det.max_residual;
                e["spectral_residual"] = det.spectral_residual;
                per_u.append(e);
            }
            d["per_u"] = per_u;
            d["sum_residual"] = rep.sum_residual;
            return d;
        },
        py::arg("fn"), py::arg("grid") = 100, py::arg("seed") = 20240901u,
        py::arg("tol") = 1e-12);
}
