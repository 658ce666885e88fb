// Python bindings for the exact symmetric-functions engine.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "waring/dsl.hpp"
#include "waring/identities.hpp"
#include "waring/partition.hpp"
#include "waring/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace waring;

namespace {

py::int_ to_py_int(const mpz_class& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Rational rational_from_py(py::handle h) {
    if (py::isinstance<Rational>(h)) return h.cast<Rational>();
    if (py::isinstance<py::int_>(h))
        return Rational(mpz_class(py::str(h).cast<std::string>()));
    if (py::isinstance<py::str>(h)) return Rational::from_string(h.cast<std::string>());
    throw py::type_error("expected a Rational, int or 'p/q' string");
}

Partition partition_from_py(py::handle h) {
    if (py::isinstance<Partition>(h)) return h.cast<Partition>();
    if (py::isinstance<py::str>(h)) return Partition::from_string(h.cast<std::string>());
    return Partition(h.cast<std::vector<int>>());
}

Basis basis_from_py(const std::string& s) {
    if (s.size() != 1) throw py::value_error("basis must be one of 'm', 'e', 'h', 'p'");
    return basis_from_letter(s[0]);
}

py::dict report_to_dict(const IdentityReport& report) {
    py::dict d;
    d["identity"] = report.identity;
    py::dict params;
    for (const auto& [key, value] : report.params) params[py::str(key)] = value;
    d["params"] = params;
    d["status"] = report.verified ? "verified" : "failed";
    d["checked_degree"] = report.checked_degree;
    d["vars"] = report.vars;
    if (report.discrepancy) {
        py::dict disc;
        disc["monomial"] = report.discrepancy->monomial;
        disc["expected"] = report.discrepancy->expected;
        disc["actual"] = report.discrepancy->actual;
        d["discrepancy"] = disc;
    } else {
        d["discrepancy"] = py::none();
    }
    return d;
}

VerifyParams params_from_kwargs(const py::kwargs& kwargs) {
    VerifyParams p;
    for (auto item : kwargs) {
        std::string key = item.first.cast<std::string>();
        py::handle value = item.second;
        if (key == "k") p.k = value.cast<int>();
        else if (key == "i") p.i = value.cast<int>();
        else if (key == "j") p.j = value.cast<int>();
        else if (key == "n") p.n = value.cast<int>();
        else if (key == "r") p.r = value.cast<int>();
        else if (key == "vars") p.vars = value.cast<int>();
        else if (key == "yvars") p.yvars = value.cast<int>();
        else if (key == "t_order") p.t_order = value.cast<int>();
        else if (key == "u_order") p.u_order = value.cast<int>();
        else if (key == "w_order") p.w_order = value.cast<int>();
        else if (key == "mu") p.mu = partition_from_py(value);
        else if (key == "lam" || key == "lambda_") p.lambda = partition_from_py(value);
        else if (key == "alpha") p.alpha = rational_from_py(value);
        else throw py::value_error("unknown verify parameter '" + key + "'");
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_waring, m) {
    m.doc() = "exact-arithmetic symmetric functions engine: partitions, the four classical "
              "bases, truncated series on X/(1-tX) and identity verification";

    py::class_<Rational>(m, "Rational")
        .def(py::init<long>())
        .def(py::init<long, long>())
        .def(py::init([](const std::string& s) { return Rational::from_string(s); }))
        .def_property_readonly("num", [](const Rational& r) { return to_py_int(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return to_py_int(r.den()); })
        .def("is_zero", &Rational::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init<std::vector<int>>())
        .def(py::init([](const std::string& s) { return Partition::from_string(s); }))
        .def_property_readonly("parts",
                               [](const Partition& mu) { return mu.parts(); })
        .def("weight", &Partition::weight)
        .def("length", &Partition::length)
        .def("multiplicity", &Partition::multiplicity)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__str__", &Partition::str)
        .def("__repr__", [](const Partition& mu) { return "Partition(" + mu.str() + ")"; });

    py::class_<ZPoly>(m, "ZPoly")
        .def(py::init<>())
        .def(py::init([](py::handle c) { return ZPoly(rational_from_py(c)); }))
        .def_static("variable", &ZPoly::variable)
        .def_static("from_coeffs",
                    [](const std::vector<py::object>& coeffs) {
                        std::vector<Rational> c;
                        for (const auto& x : coeffs) c.push_back(rational_from_py(x));
                        return ZPoly::from_coeffs(std::move(c));
                    })
        .def("degree", &ZPoly::degree)
        .def("coeff", &ZPoly::coeff)
        .def("is_zero", &ZPoly::is_zero)
        .def("eval", [](const ZPoly& p, py::handle v) { return p.eval(rational_from_py(v)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", [](const ZPoly& p) { return p.str(); })
        .def("str", &ZPoly::str, py::arg("var") = "z");

    py::class_<MultiPoly>(m, "MultiPoly")
        .def(py::init<int>())
        .def_property_readonly("nvars", &MultiPoly::nvars)
        .def("total_degree", &MultiPoly::total_degree)
        .def("is_zero", &MultiPoly::is_zero)
        .def("coeff", &MultiPoly::coeff)
        .def("items",
             [](const MultiPoly& p) {
                 std::vector<std::pair<std::vector<int>, ZPoly>> out;
                 for (const auto& [exps, c] : p.terms()) out.emplace_back(exps, c);
                 return out;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &MultiPoly::str);

    py::class_<BiSeries>(m, "BiSeries")
        .def(py::init<int, int, int>())
        .def_property_readonly("nvars", &BiSeries::nvars)
        .def_property_readonly("t_order", &BiSeries::t_order)
        .def_property_readonly("u_order", &BiSeries::u_order)
        .def("coeff", &BiSeries::coeff)
        .def("is_zero", &BiSeries::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &BiSeries::str);

    py::class_<SymExpr>(m, "SymExpr")
        .def_property_readonly("basis",
                               [](const SymExpr& e) {
                                   return std::string(1, basis_letter(e.basis()));
                               })
        .def("items",
             [](const SymExpr& e) {
                 std::vector<std::pair<Partition, ZPoly>> out;
                 for (const auto& [mu, c] : e.terms()) out.emplace_back(mu, c);
                 return out;
             })
        .def("total_degree", &SymExpr::total_degree)
        .def("is_zero", &SymExpr::is_zero)
        .def(py::self == py::self)
        .def("__str__", &SymExpr::str);

    m.def("factorial", [](unsigned long n) { return factorial(n); });
    m.def("binom_int", [](long n, long k) { return binom_int(n, k); });
    m.def("binom_z", &binom_z);
    m.def("rising_factorial",
          [](py::handle x, unsigned long n) { return rising_factorial(rational_from_py(x), n); });

    m.def("partitions_of", &partitions_of);
    m.def("z_of", [](py::handle mu) { return to_py_int(z_of(partition_from_py(mu))); });
    m.def("lassalle_binom", [](py::handle mu, long k) {
        return to_py_int(lassalle_binom(partition_from_py(mu), k));
    });
    m.def("lassalle_binom_genfun", [](py::handle mu, int q_order) {
        return lassalle_binom_genfun(partition_from_py(mu), q_order);
    });
    m.def("ferrers_alphabet", [](py::handle lam, py::handle alpha) {
        return ferrers_alphabet(partition_from_py(lam), rational_from_py(alpha)).values;
    });
    m.def("pochhammer", [](py::handle x, py::handle lam, py::handle alpha) -> py::object {
        Partition p = partition_from_py(lam);
        Rational a = rational_from_py(alpha);
        if (py::isinstance<ZPoly>(x)) return py::cast(pochhammer(x.cast<ZPoly>(), p, a));
        return py::cast(pochhammer(rational_from_py(x), p, a));
    });

    m.def("power_poly", &power_poly);
    m.def("elementary_poly", &elementary_poly);
    m.def("complete_poly", &complete_poly);
    m.def("monomial_poly",
          [](py::handle mu, int nvars) { return monomial_poly(partition_from_py(mu), nvars); });
    m.def("sym_atom", [](const std::string& basis, py::handle mu) {
        return SymExpr::atom(basis_from_py(basis), partition_from_py(mu));
    });
    m.def(
        "expand",
        [](const SymExpr& e, int nvars, bool require_faithful) {
            return expand(e, nvars, require_faithful);
        },
        py::arg("expr"), py::arg("nvars"), py::arg("require_faithful") = true);
    m.def("complete_in_power", &complete_in_power);
    m.def("elementary_in_power", &elementary_in_power);
    m.def("power_in_elementary", &power_in_elementary);
    m.def("power_in_homogeneous", &power_in_homogeneous);
    m.def("transformed_basis_series", [](const std::string& basis, int k, int nvars, int t_order) {
        return transformed_basis_series(basis_from_py(basis), k, nvars, t_order);
    });
    m.def("shifted_power_series", &shifted_power_series);

    m.def("thm1_rhs", [](const std::string& variant, int k, int t_order) {
        return thm1_rhs(basis_from_py(variant), k, t_order);
    });
    m.def("thm2_rhs", [](const std::string& variant, int k, int t_order) {
        return thm2_rhs(basis_from_py(variant), k, t_order);
    });
    m.def("F_direct", &F_direct);
    m.def("F_expansion", [](const std::string& variant, int i, int j) {
        FVariant v = variant == "m"    ? FVariant::monomial
                     : variant == "p1" ? FVariant::power_weight_shift
                     : variant == "p2" ? FVariant::power_count_shift
                                       : throw py::value_error("variant must be m, p1 or p2");
        return F_expansion(v, i, j);
    });
    m.def("cor4_sides",
          [](int i, int j, py::handle mu) { return cor4_sides(i, j, partition_from_py(mu)); });
    m.def("cor5_sides", &cor5_sides);
    m.def("thm5_sides", [](py::handle lam, py::handle alpha, int w_order) {
        return thm5_sides(partition_from_py(lam), rational_from_py(alpha), w_order);
    });
    m.def("thm6_sides", &thm6_sides);
    m.def("appendix_factorization_check", [](int t_order, int q_order, int yvars, int u_order) {
        return report_to_dict(appendix_factorization_check(t_order, q_order, yvars, u_order));
    });
    m.def("verify", [](const std::string& identity_id, const py::kwargs& kwargs) {
        return report_to_dict(verify(identity_id, params_from_kwargs(kwargs)));
    });
    m.def("identity_ids", []() {
        std::vector<std::string> ids;
        for (const auto& info : identity_catalog()) ids.push_back(info.id);
        return ids;
    });

    m.def("dsl_print", [](const std::string& text) { return dsl::to_string(*dsl::parse(text)); });
    m.def(
        "dsl_eval",
        [](const std::string& text, int nvars, int t_order) {
            return dsl::eval(*dsl::parse(text), nvars, t_order);
        },
        py::arg("text"), py::arg("vars") = 6, py::arg("t_order") = 0);
    m.def(
        "check_equal",
        [](const std::string& lhs, const std::string& rhs, int nvars, int t_order) {
            return dsl::eval(*dsl::parse(lhs), nvars, t_order) ==
                   dsl::eval(*dsl::parse(rhs), nvars, t_order);
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("vars") = 6, py::arg("t_order") = 6);

    py::register_exception<dsl::ParseError>(m, "DslParseError");
}
