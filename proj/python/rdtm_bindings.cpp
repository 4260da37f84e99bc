#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdtm/engine.hpp"
#include "rdtm/ks.hpp"
#include "rdtm/parse.hpp"
#include "rdtm/verify.hpp"
#include "rdtm/verify_quad.hpp"

namespace py = pybind11;
using namespace rdtm;

namespace {

Bindings make_bindings(const std::map<std::string, double>& constants)
{
    Bindings b;
    for (const auto& [k, v] : constants) b.set(k, v);
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Reduced differential transform series for Kuramoto-Sivashinsky problems";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "EvalError", PyExc_ArithmeticError);
    py::register_exception<EngineError>(m, "EngineError", PyExc_RuntimeError);

    py::class_<Expr>(m, "Expr")
        .def("__str__", [](const Expr& e) { return to_string(e); })
        .def("__repr__", [](const Expr& e) { return "Expr('" + to_string(e) + "')"; })
        .def("evaluate", [](const Expr& e, double x, const std::map<std::string, double>& constants) {
                 return evaluate(e, make_bindings(constants).at(x));
             },
             py::arg("x"), py::arg("constants") = std::map<std::string, double>{})
        .def("differentiate", [](const Expr& e, int order) { return differentiate(e, order); }, py::arg("order") = 1)
        .def("simplify", [](const Expr& e) { return simplify(e); })
        .def_property_readonly("named_constants", [](const Expr& e) { return named_constants(e); })
        .def_property_readonly("node_count", [](const Expr& e) { return node_count(e); })
        .def_property_readonly("depends_on_x", [](const Expr& e) { return depends_on_x(e); });

    m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));

    py::class_<LinearTerm>(m, "LinearTerm")
        .def(py::init([](double c, int order) { return LinearTerm{c, order}; }), py::arg("coefficient"),
             py::arg("order"))
        .def_readwrite("coefficient", &LinearTerm::coefficient)
        .def_readwrite("order", &LinearTerm::derivative_order);

    py::class_<NonlinearTerm>(m, "NonlinearTerm")
        .def(py::init([](double c, int power, int order) { return NonlinearTerm{c, power, order}; }),
             py::arg("coefficient"), py::arg("power"), py::arg("order"))
        .def_readwrite("coefficient", &NonlinearTerm::coefficient)
        .def_readwrite("power", &NonlinearTerm::power)
        .def_readwrite("order", &NonlinearTerm::derivative_order);

    py::class_<PdeModel>(m, "PdeModel")
        .def(py::init([](std::vector<LinearTerm> linear, std::vector<NonlinearTerm> nonlinear) {
                 PdeModel p{std::move(linear), std::move(nonlinear)};
                 p.validate();
                 return p;
             }),
             py::arg("linear") = std::vector<LinearTerm>{}, py::arg("nonlinear") = std::vector<NonlinearTerm>{})
        .def_readonly("linear", &PdeModel::linear)
        .def_readonly("nonlinear", &PdeModel::nonlinear);

    py::class_<KsParams>(m, "KsParams")
        .def(py::init([](double c, std::optional<double> kappa, double x0) {
                 KsParams p{c, kappa.value_or(default_kappa()), x0};
                 try {
                     p.validate();
                 } catch (const std::invalid_argument& e) {
                     throw py::value_error(e.what());
                 }
                 return p;
             }),
             py::arg("c") = 0.1, py::arg("kappa") = py::none(), py::arg("x0") = -30.0)
        .def_readonly("c", &KsParams::c)
        .def_readonly("kappa", &KsParams::kappa)
        .def_readonly("x0", &KsParams::x0)
        .def("constants", [](const KsParams& p) {
            const auto b = p.bindings();
            return std::map<std::string, double>(b.constants.begin(), b.constants.end());
        });

    m.def("ks_initial", []() { return ks_initial(); });
    m.def("ks_exact", &ks_exact, py::arg("params"), py::arg("x"), py::arg("t"));
    m.def("ks_model", &ks_model, py::arg("gamma") = 1.0, py::arg("lambda_") = 1.0);
    m.def("ks_printed_model", &ks_printed_model, py::arg("gamma") = 1.0, py::arg("lambda_") = 1.0);
    m.def("generalized_model", &generalized_model, py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
          py::arg("tau"), py::arg("lambda_"));

    py::class_<SpectrumSeries>(m, "SpectrumSeries")
        .def_property_readonly("order", &SpectrumSeries::order)
        .def("__len__", [](const SpectrumSeries& s) { return s.order() + 1; })
        .def("__getitem__", [](const SpectrumSeries& s, int k) {
            if (k < 0) k += s.order() + 1;
            if (k < 0 || k > s.order()) throw py::index_error("spectrum index out of range");
            return s[static_cast<std::size_t>(k)];
        })
        .def("truncated", &SpectrumSeries::truncated, py::arg("order"))
        .def("coefficients_at", [](const SpectrumSeries& s, double x, const std::map<std::string, double>& constants) {
                 return SeriesEvaluator(s, make_bindings(constants)).coefficients_at(x);
             },
             py::arg("x"), py::arg("constants") = std::map<std::string, double>{})
        .def("assemble", [](const SpectrumSeries& s, double x, double t, const std::map<std::string, double>& constants) {
                 return assemble(s, x, t, make_bindings(constants));
             },
             py::arg("x"), py::arg("t"), py::arg("constants") = std::map<std::string, double>{});

    m.def("build_series", &build_series, py::arg("model"), py::arg("initial"), py::arg("order") = kDefaultSeriesOrder);

    py::class_<ErrorRow>(m, "ErrorRow")
        .def_readonly("x", &ErrorRow::x)
        .def_readonly("t", &ErrorRow::t)
        .def_readonly("rdtm", &ErrorRow::rdtm)
        .def_readonly("exact", &ErrorRow::exact)
        .def_readonly("abs_err", &ErrorRow::abs_err)
        .def("__repr__", [](const ErrorRow& r) {
            return "ErrorRow(x=" + std::to_string(r.x) + ", t=" + std::to_string(r.t) +
                   ", abs_err=" + std::to_string(r.abs_err) + ")";
        });

    m.def(
        "compare_table",
        [](const KsParams& p, int order, std::vector<double> xs, std::vector<double> ts, const PdeModel& model) {
            if (xs.empty() || ts.empty()) throw py::value_error("grid must be nonempty");
            return compare_table(p, order, std::move(xs), std::move(ts), model).rows;
        },
        py::arg("params"), py::arg("order"), py::arg("xs"), py::arg("ts"), py::arg("model") = ks_model());

    m.def(
        "residual_slope",
        [](const SpectrumSeries& s, const PdeModel& model, const std::map<std::string, double>& constants, double x,
           double t_lo, double t_hi, int samples) {
            return residual_slope(s, model, make_bindings(constants), x, t_lo, t_hi, samples).slope;
        },
        py::arg("series"), py::arg("model"), py::arg("constants"), py::arg("x") = 0.0, py::arg("t_lo") = 1e-3,
        py::arg("t_hi") = 1e-1, py::arg("samples") = 9);
}
