#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperappell/errors.hpp"
#include "hyperappell/family.hpp"
#include "hyperappell/format.hpp"
#include "hyperappell/identities.hpp"
#include "hyperappell/reductions.hpp"

namespace py = pybind11;
namespace ha = hyperappell;

// Rational <-> fractions.Fraction. Accepts int, Fraction or a "p/q" string.
namespace pybind11::detail {
template <>
struct type_caster<ha::Rational> {
    PYBIND11_TYPE_CASTER(ha::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src) return false;
        if (py::isinstance<py::str>(src)) {
            value = ha::Rational::parse(src.cast<std::string>());
            return true;
        }
        if (py::isinstance<py::bool_>(src)) return false;
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        std::string num = py::str(src.attr("numerator"));
        std::string den = py::str(src.attr("denominator"));
        value = ha::Rational::parse(num + "/" + den);
        return true;
    }

    static handle cast(const ha::Rational& r, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(r.str()).release();
    }
};
} // namespace pybind11::detail

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact hypergeometric Appell polynomials";
    py::register_exception<ha::Error>(m, "Error", PyExc_ValueError);

    m.def("pochhammer", &ha::pochhammer, py::arg("x"), py::arg("n"));
    m.def("falling_factorial", &ha::falling_factorial, py::arg("x"), py::arg("n"));

    py::class_<ha::LaurentPoly>(m, "LaurentPoly")
        .def(py::init([](long min_exponent, std::vector<ha::Rational> coeffs) {
                 return ha::LaurentPoly(min_exponent, std::move(coeffs));
             }),
             py::arg("min_exponent"), py::arg("coeffs"))
        .def_static("from_ascending", &ha::LaurentPoly::from_ascending, py::arg("coeffs"))
        .def_property_readonly("min_exponent", &ha::LaurentPoly::min_exponent)
        .def_property_readonly("degree", &ha::LaurentPoly::degree)
        .def_property_readonly("coeffs",
                               [](const ha::LaurentPoly& p) {
                                   auto c = p.coeffs();
                                   return std::vector<ha::Rational>(c.begin(), c.end());
                               })
        .def("coeff", &ha::LaurentPoly::coeff, py::arg("exponent"))
        .def("__call__", &ha::LaurentPoly::eval, py::arg("x"))
        .def("derivative", &ha::LaurentPoly::derivative)
        .def("compose", &ha::LaurentPoly::compose, py::arg("f"))
        .def("to_latex", [](const ha::LaurentPoly& p) { return ha::to_latex(p); })
        .def("to_csv", [](const ha::LaurentPoly& p) { return ha::to_csv(p); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const ha::LaurentPoly& p) { return "LaurentPoly(" + ha::to_plain(p) + ")"; });

    py::class_<ha::FamilySpec>(m, "FamilySpec")
        .def(py::init([](unsigned k, ha::Rational mm, std::vector<ha::Rational> a, std::vector<ha::Rational> b) {
                 return ha::FamilySpec(ha::HyperParams(std::move(a), std::move(b)), k, std::move(mm));
             }),
             py::arg("k"), py::arg("m"), py::arg("a") = std::vector<ha::Rational>{},
             py::arg("b") = std::vector<ha::Rational>{})
        .def_property_readonly("k", &ha::FamilySpec::k)
        .def_property_readonly("m", &ha::FamilySpec::m)
        .def_property_readonly("a", [](const ha::FamilySpec& s) { return s.params().upper(); })
        .def_property_readonly("b", [](const ha::FamilySpec& s) { return s.params().lower(); })
        .def(py::self == py::self)
        .def("__repr__", [](const ha::FamilySpec& s) { return "FamilySpec(" + ha::family_to_json(s) + ")"; });

    py::class_<ha::IdentityReport>(m, "IdentityReport")
        .def_readonly("identity_name", &ha::IdentityReport::identity_name)
        .def_readonly("n", &ha::IdentityReport::n)
        .def_readonly("inputs", &ha::IdentityReport::inputs)
        .def_readonly("holds", &ha::IdentityReport::holds)
        .def_readonly("lhs_witness", &ha::IdentityReport::lhs_witness)
        .def_readonly("rhs_witness", &ha::IdentityReport::rhs_witness)
        .def_readonly("note", &ha::IdentityReport::note)
        .def_readonly("secondary", &ha::IdentityReport::secondary)
        .def("__bool__", [](const ha::IdentityReport& r) { return r.holds; });

    m.def("gamma_ratio",
          [](const ha::FamilySpec& s, unsigned i) { return ha::gamma_ratio(s.params(), i); },
          py::arg("spec"), py::arg("i"));
    m.def("appell_poly", &ha::appell_poly, py::arg("spec"), py::arg("n"));
    m.def("appell_laurent_form", &ha::appell_laurent_form, py::arg("spec"), py::arg("n"));
    m.def("gf_coefficient_poly", &ha::gf_coefficient_poly, py::arg("spec"), py::arg("n"));
    m.def("apply_diff_operator", &ha::apply_diff_operator, py::arg("spec"), py::arg("n"));
    m.def("composed_poly", &ha::composed_poly, py::arg("spec"), py::arg("n"), py::arg("f"));
    m.def("generating_series",
          [](const ha::FamilySpec& s, unsigned order) { return ha::generating_series(s, order).scalars(); },
          py::arg("spec"), py::arg("order"));

    py::enum_<ha::ConnectionDirection>(m, "ConnectionDirection")
        .value("family_over_monomials", ha::ConnectionDirection::family_over_monomials)
        .value("monomials_over_family", ha::ConnectionDirection::monomials_over_family);
    m.def("connection_coefficients", &ha::connection_coefficients, py::arg("spec"), py::arg("N"),
          py::arg("direction") = ha::ConnectionDirection::family_over_monomials);

    py::enum_<ha::ReductionKind>(m, "ReductionKind")
        .value("hermite", ha::ReductionKind::hermite)
        .value("gould_hopper", ha::ReductionKind::gould_hopper);
    m.def("reduce_spec", &ha::reduce_spec, py::arg("kind"), py::arg("k"), py::arg("h") = ha::Rational(0));
    m.def("hermite_probabilists", &ha::hermite_probabilists, py::arg("n"));
    m.def("gould_hopper", &ha::gould_hopper, py::arg("n"), py::arg("k"), py::arg("h"));

    m.def("check_appell_derivative", &ha::check_appell_derivative, py::arg("spec"), py::arg("n"));
    m.def("check_corollary1", &ha::check_corollary1, py::arg("spec"), py::arg("n"));
    m.def("check_addition", &ha::check_addition, py::arg("spec"), py::arg("n"));
    m.def("check_multiplication", &ha::check_multiplication, py::arg("spec"), py::arg("n"), py::arg("M"));
    m.def(
        "check_index_interchange",
        [](const ha::FamilySpec& s, unsigned k2, unsigned n) {
            return ha::check_index_interchange(s.params(), s.m(), s.k(), k2, n);
        },
        py::arg("spec"), py::arg("k2"), py::arg("n"));
    m.def("check_convolution", &ha::check_convolution, py::arg("spec"), py::arg("n"));
    m.def("check_parity", &ha::check_parity, py::arg("spec"), py::arg("n"));
    m.def("check_composed_derivative", &ha::check_composed_derivative, py::arg("spec"), py::arg("n"),
          py::arg("f"));
}
