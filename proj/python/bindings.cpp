#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sharpbounds/enclosure.hpp"
#include "sharpbounds/fn_parse.hpp"
#include "sharpbounds/json_io.hpp"
#include "sharpbounds/mm.hpp"
#include "sharpbounds/oracle.hpp"

namespace py = pybind11;
using namespace sharpbounds;

PYBIND11_MODULE(_sharpbounds, m) {
    m.doc() = "Taylor polynomial enclosures with sharp interval coefficients";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def_static("point", &Interval::point)
        .def_static("entire", &Interval::entire)
        .def("__repr__",
             [](const Interval& iv) {
                 return "Interval(" + format_double(iv.lo) + ", " + format_double(iv.hi) + ")";
             });

    m.def("width", &width);
    m.def("contains", &contains);
    m.def("is_subset", &is_subset);
    m.def("scale", &scale);
    m.def("hull", &hull);
    m.def("inflate_ulps", &inflate_ulps);

    py::enum_<MethodTag>(m, "MethodTag")
        .value("SharpMonotone", MethodTag::SharpMonotone)
        .value("SharpEvenSymmetric", MethodTag::SharpEvenSymmetric)
        .value("LocalExtrema", MethodTag::LocalExtrema)
        .value("IntervalDerivative", MethodTag::IntervalDerivative)
        .value("LagrangeBaseline", MethodTag::LagrangeBaseline);

    py::class_<FunctionDescriptor>(m, "FunctionDescriptor")
        .def_readonly("name", &FunctionDescriptor::name)
        .def_readonly("domain", &FunctionDescriptor::domain)
        .def("__call__", [](const FunctionDescriptor& f, double x) { return f.eval(x); })
        .def("derivative",
             [](const FunctionDescriptor& f, int order, double x) {
                 return f.nth_derivative(order, x);
             });

    m.def("catalog_lookup", &catalog_lookup, py::arg("name"),
          py::arg("params") = std::vector<double>{});
    m.def("parse_function", &parse_function);

    py::class_<TaylorPoly>(m, "TaylorPoly")
        .def_readonly("x0", &TaylorPoly::x0)
        .def_readonly("coeffs", &TaylorPoly::coeffs)
        .def("eval", &TaylorPoly::eval);

    m.def("taylor_coefficients", &taylor_coefficients);
    m.def("remainder", [](const FunctionDescriptor& f, int j, double x0, double x) {
        return sharpbounds::remainder(f, j, x0, x);
    });
    m.def("remainder_ratio", &remainder_ratio);

    py::class_<TaylorEnclosure>(m, "TaylorEnclosure")
        .def_readonly("x0", &TaylorEnclosure::x0)
        .def_readonly("degree", &TaylorEnclosure::degree)
        .def_readonly("lower_coeffs", &TaylorEnclosure::lower_coeffs)
        .def_readonly("interval_coeff", &TaylorEnclosure::interval_coeff)
        .def_readonly("trust_region", &TaylorEnclosure::trust_region)
        .def_readonly("method", &TaylorEnclosure::method);

    py::class_<EnclosureReport>(m, "EnclosureReport")
        .def_readonly("enclosure", &EnclosureReport::enclosure)
        .def_readonly("baseline_interval", &EnclosureReport::baseline_interval)
        .def_readonly("width_ratio", &EnclosureReport::width_ratio)
        .def_readonly("diagnostics", &EnclosureReport::diagnostics);

    m.def("enclose", &enclose);
    m.def("eval_enclosure", &eval_enclosure);
    m.def("enclose_split", &enclose_split);
    m.def("sharp_monotone", &sharp_monotone);
    m.def("sharp_even_symmetric_quadratic", &sharp_even_symmetric_quadratic);
    m.def("lagrange_baseline", &lagrange_baseline);
    m.def("derivative_range",
          [](const FunctionDescriptor& f, int k, const Interval& region) {
              return derivative_range(f, k, region);
          });

    py::class_<Violation>(m, "Violation")
        .def_readonly("x", &Violation::x)
        .def_readonly("fx", &Violation::fx)
        .def_readonly("bound", &Violation::bound);

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("points_checked", &ValidityReport::points_checked)
        .def_readonly("violations", &ValidityReport::violations)
        .def_readonly("max_violation_magnitude", &ValidityReport::max_violation_magnitude);

    py::class_<RatioSeries>(m, "RatioSeries")
        .def_readonly("epsilons", &RatioSeries::epsilons)
        .def_readonly("ratios", &RatioSeries::ratios)
        .def_readonly("baseline_widths", &RatioSeries::baseline_widths)
        .def_readonly("sharp_widths", &RatioSeries::sharp_widths)
        .def_readonly("predicted_limit", &RatioSeries::predicted_limit)
        .def_readonly("ell", &RatioSeries::ell)
        .def_readonly("slope_baseline", &RatioSeries::slope_baseline)
        .def_readonly("slope_sharp", &RatioSeries::slope_sharp);

    m.def("grid_sharp_interval", &grid_sharp_interval, py::arg("f"), py::arg("k"), py::arg("x0"),
          py::arg("region"), py::arg("n") = 1000000L);
    m.def("verify_enclosure", &verify_enclosure, py::arg("f"), py::arg("e"),
          py::arg("n") = 100000L);
    m.def("width_ratio_series", &width_ratio_series, py::arg("f"), py::arg("k"), py::arg("x0"),
          py::arg("epsilons") = std::vector<double>{});

    py::class_<MMRecord>(m, "MMRecord")
        .def_readonly("iter", &MMRecord::iter)
        .def_readonly("x", &MMRecord::x)
        .def_readonly("loss", &MMRecord::loss)
        .def_readonly("trust_region", &MMRecord::trust_region)
        .def_readonly("z_upper", &MMRecord::z_upper);

    py::class_<MMTrace>(m, "MMTrace")
        .def_readonly("records", &MMTrace::records)
        .def_readonly("converged", &MMTrace::converged)
        .def_readonly("diagnostics", &MMTrace::diagnostics);

    m.def("mm_step",
          [](const FunctionDescriptor& f, double x, double radius) { return mm_step(f, x, radius); });
    m.def("mm_minimize", &mm_minimize);

    m.def("enclosure_report_json",
          [](const std::string& spec, int k, const EnclosureReport& rep) {
              return dump_json(to_json(spec, k, rep));
          });
}
