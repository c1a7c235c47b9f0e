#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lfc/alpha_num.hpp"
#include "lfc/convexity.hpp"
#include "lfc/falsify.hpp"
#include "lfc/fracpoly.hpp"
#include "lfc/function_spec.hpp"
#include "lfc/ineq.hpp"
#include "lfc/quad.hpp"
#include "lfc/report.hpp"
#include "lfc/sweep.hpp"

namespace py = pybind11;
using namespace lfc;

namespace {

py::dict report_dict(const IneqReport& r) {
    py::dict d;
    d["ineq"] = std::string(to_string(r.id));
    d["alpha"] = r.params.alpha;
    d["s"] = r.params.s;
    d["p"] = r.params.p;
    d["q"] = r.params.q;
    d["a"] = r.params.a;
    d["b"] = r.params.b;
    d["x"] = r.params.x;
    d["fn"] = r.fn;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["slack"] = r.slack;
    d["holds"] = r.holds;
    d["notes"] = r.notes;
    return d;
}

py::list report_list(const std::vector<IneqReport>& rows) {
    py::list out;
    for (const IneqReport& r : rows)
        out.append(report_dict(r));
    return out;
}

IneqId ineq_from(const std::string& text) {
    const auto id = parse_ineq_id(text);
    if (!id)
        throw py::value_error("unknown inequality '" + text + "'");
    return *id;
}

}  // namespace

PYBIND11_MODULE(_lfc, m) {
    m.doc() = "Local fractional calculus inequality engine";

    py::register_exception<GammaPoleError>(m, "GammaPoleError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<AlphaContext>(m, "AlphaContext")
        .def(py::init<double, double, double>(), py::arg("alpha"),
             py::arg("slack_tol") = AlphaContext::kDefaultSlackTol,
             py::arg("fp_tol") = AlphaContext::kDefaultFpTol)
        .def_property_readonly("alpha", &AlphaContext::alpha)
        .def_property_readonly("slack_tol", &AlphaContext::slack_tol)
        .def_property_readonly("fp_tol", &AlphaContext::fp_tol)
        .def("__repr__", [](const AlphaContext& c) {
            return "AlphaContext(alpha=" + std::to_string(c.alpha()) + ")";
        });

    m.def("gamma", &lfc::gamma, py::arg("x"));
    m.def("log_gamma", &lfc::log_gamma, py::arg("x"));
    m.def("mittag_leffler", &mittag_leffler, py::arg("x"), py::arg("ctx"),
          py::arg("tol") = 1e-16, py::arg("max_terms") = 10'000);

    py::class_<AlphaSeries>(m, "AlphaSeries")
        .def(py::init([](const AlphaContext& ctx, const std::vector<std::pair<double, double>>& t) {
                 std::vector<Term> terms;
                 for (auto [k, c] : t)
                     terms.push_back({k, c});
                 return AlphaSeries(ctx, std::move(terms));
             }),
             py::arg("ctx"), py::arg("terms"))
        .def_static("monomial", &AlphaSeries::monomial, py::arg("ctx"), py::arg("grade"),
                    py::arg("coeff") = 1.0)
        .def_property_readonly("terms",
                               [](const AlphaSeries& f) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const Term& t : f.terms())
                                       out.emplace_back(t.grade, t.coeff);
                                   return out;
                               })
        .def_property_readonly("context", &AlphaSeries::context)
        .def("__call__", &AlphaSeries::operator(), py::arg("x"))
        .def("__add__", [](const AlphaSeries& f, const AlphaSeries& g) { return f + g; })
        .def("__sub__", [](const AlphaSeries& f, const AlphaSeries& g) { return f - g; })
        .def("__mul__", [](const AlphaSeries& f, const AlphaSeries& g) { return f * g; })
        .def("__mul__", [](const AlphaSeries& f, double c) { return c * f; })
        .def("__rmul__", [](const AlphaSeries& f, double c) { return c * f; })
        .def("__eq__", [](const AlphaSeries& f, const AlphaSeries& g) { return f == g; })
        .def("__repr__", &AlphaSeries::to_string);

    m.def("parse_function", [](const std::string& text, const AlphaContext& ctx) {
        return parse_function_spec(text).to_series(ctx);
    }, py::arg("spec"), py::arg("ctx"));
    m.def("lf_derivative", &lf_derivative, py::arg("f"));
    m.def("lf_derivative_n", &lf_derivative_n, py::arg("f"), py::arg("n"));
    m.def("lf_integral", &lf_integral, py::arg("f"), py::arg("a"), py::arg("b"));
    m.def("byparts_residual", &byparts_residual, py::arg("f"), py::arg("g"), py::arg("a"),
          py::arg("b"));

    m.def("fractal_integral", [](const std::function<double(double)>& g, double alpha,
                                 int max_grade) {
        const MomentFunctional J(AlphaContext(alpha), max_grade);
        const QuadResult r = fractal_integral_numeric(g, J);
        return py::make_tuple(r.value, r.residual);
    }, py::arg("g"), py::arg("alpha"), py::arg("max_grade") = MomentFunctional::kDefaultMaxGrade,
          "J[g] on [0, 1]; returns (value, fit residual).");

    m.def("ostrowski_constants", [](double s, double alpha) {
        const OstrowskiConstants k = ostrowski_constants(s, AlphaContext(alpha));
        return py::make_tuple(k.M, k.N);
    }, py::arg("s"), py::arg("alpha"));

    m.def("identity_residual", [](const std::string& fn, double alpha, double x, double a,
                                  double b) {
        const AlphaContext ctx(alpha);
        const MomentFunctional J(ctx);
        return identity_residual(parse_function_spec(fn).to_series(ctx), x, a, b, J);
    }, py::arg("fn"), py::arg("alpha"), py::arg("x"), py::arg("a"), py::arg("b"));

    m.def("check_s_convex", [](const std::function<double(double)>& f, double s, double lo,
                               double hi, double alpha, int grid) {
        const ConvexityVerdict v = check_s_convex_second(f, s, lo, hi, AlphaContext(alpha),
                                                         LatticeOptions{grid, 0, 0});
        py::dict d;
        d["holds_on_grid"] = v.holds_on_grid;
        d["negative_values"] = v.negative_values;
        if (v.witness)
            d["witness"] = py::make_tuple(v.witness->x1, v.witness->x2, v.witness->lam,
                                          v.witness->gap);
        else
            d["witness"] = py::none();
        return d;
    }, py::arg("f"), py::arg("s"), py::arg("lo"), py::arg("hi"), py::arg("alpha"),
          py::arg("grid") = 64);

    m.def("evaluate", [](const std::string& ineq, const std::string& fn, double alpha, double a,
                         double b, std::optional<double> s, std::optional<double> p,
                         std::optional<double> q, std::optional<double> x) {
        EvalPoint pt{ineq_from(ineq), alpha, std::nullopt, std::nullopt, std::nullopt, a, b,
                     std::nullopt};
        const Axes ax = axes_of(pt.id);
        if (ax.s)
            pt.s = s;
        if (ax.pq)
            pt.p = p;
        if (ax.pq || ax.q_only)
            pt.q = q;
        if (ax.x)
            pt.x = x;
        const FunctionSpec spec = parse_function_spec(fn);
        IneqReport r =
            evaluate_point(pt, spec.to_series(AlphaContext(alpha)), nullptr, EvalOptions{});
        r.params = params_of(pt);
        r.fn = spec.source;
        return report_dict(r);
    }, py::arg("ineq"), py::arg("fn"), py::arg("alpha"), py::arg("a"), py::arg("b"),
          py::arg("s") = py::none(), py::arg("p") = py::none(), py::arg("q") = py::none(),
          py::arg("x") = py::none());

    m.def("run_sweep", [](const std::string& config_json, bool parallel) {
        SweepOptions opt;
        opt.parallel = parallel;
        std::vector<IneqReport> rows;
        {
            py::gil_scoped_release release;
            rows = run_sweep(parse_sweep_config(config_json), opt);
        }
        return report_list(rows);
    }, py::arg("config_json"), py::arg("parallel") = false);

    m.def("sweep_csv", [](const std::string& config_json) {
        return to_csv(run_sweep(parse_sweep_config(config_json)));
    }, py::arg("config_json"));

    m.def("falsify", [](const std::string& ineq, const std::string& family,
                        const std::string& config_json, int trials, std::uint64_t seed,
                        bool adversarial) -> py::object {
        FalsifyOptions opt;
        opt.adversarial = adversarial;
        const auto cex = falsify(ineq_from(ineq), parse_function_spec(family),
                                 parse_sweep_config(config_json), trials, seed, opt);
        if (!cex)
            return py::none();
        py::dict d;
        d["trial"] = cex->trial;
        d["initial"] = report_dict(cex->initial);
        d["shrunk"] = report_dict(cex->shrunk);
        return d;
    }, py::arg("ineq"), py::arg("family"), py::arg("config_json"), py::arg("trials"),
          py::arg("seed") = 0, py::arg("adversarial") = false);
}
