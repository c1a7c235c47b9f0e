// lfc: command line front end for the inequality engine.
//
// Exit status: 0 when every evaluated inequality holds, 1 when at least one
// is violated, 2 on configuration or runtime errors.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfc/falsify.hpp"
#include "lfc/function_spec.hpp"
#include "lfc/ineq.hpp"
#include "lfc/quad.hpp"
#include "lfc/report.hpp"
#include "lfc/sweep.hpp"

namespace {

using namespace lfc;

const std::map<std::string, ReportFormat> kFormats{{"csv", ReportFormat::Csv},
                                                    {"json", ReportFormat::Json}};

IneqId ineq_from(const std::string& text) {
    const auto id = parse_ineq_id(text);
    if (!id)
        throw std::invalid_argument("unknown inequality '" + text + "'");
    return *id;
}

int cmd_constants(double alpha, double s) {
    const OstrowskiConstants k = ostrowski_constants(s, AlphaContext(alpha));
    std::printf("M = %.17g\nN = %.17g\n", k.M, k.N);
    return 0;
}

struct EvalArgs {
    std::string ineq, fn, gfn;
    double alpha = 1.0, a = 0.0, b = 1.0;
    std::optional<double> s, p, q, x;
    ReportFormat format = ReportFormat::Csv;
    int max_grade = MomentFunctional::kDefaultMaxGrade;
};

int cmd_eval(const EvalArgs& ea) {
    EvalPoint pt;
    pt.id = ineq_from(ea.ineq);
    pt.alpha = ea.alpha;
    pt.a = ea.a;
    pt.b = ea.b;
    const Axes ax = axes_of(pt.id);
    // Only the parameters the inequality uses are echoed.
    if (ax.s)
        pt.s = ea.s;
    if (ax.pq) {
        pt.p = ea.p;
        pt.q = ea.q;
    }
    if (ax.q_only)
        pt.q = ea.q;
    if (ax.x)
        pt.x = ea.x;

    const AlphaContext ctx(ea.alpha);
    const FunctionSpec spec = parse_function_spec(ea.fn);
    const AlphaSeries f = spec.to_series(ctx);
    std::optional<AlphaSeries> g;
    if (!ea.gfn.empty())
        g = parse_function_spec(ea.gfn).to_series(ctx);
    std::optional<MomentFunctional> J;
    if (pt.id == IneqId::Holder || pt.id == IneqId::Identity)
        J.emplace(ctx, ea.max_grade);

    IneqReport r = evaluate_point(pt, f, J ? &*J : nullptr, EvalOptions{}, g ? &*g : nullptr);
    r.params = params_of(pt);
    r.fn = spec.source;
    const std::vector<IneqReport> rows{r};
    emit_report(rows, ea.format, "-");
    return exit_code(rows);
}

int cmd_sweep(const std::string& config, const std::string& out, ReportFormat format,
              bool parallel, unsigned threads) {
    const SweepConfig cfg = load_sweep_config(config);
    SweepOptions opt;
    opt.parallel = parallel;
    opt.threads = threads;
    const std::vector<IneqReport> rows = run_sweep(cfg, opt);
    emit_report(rows, format, out);
    return exit_code(rows);
}

struct FalsifyArgs {
    std::string ineq, family, config;
    int trials = 1000;
    std::uint64_t seed = 0;
    std::vector<double> alphas{1.0};
    bool adversarial = false;
    ReportFormat format = ReportFormat::Csv;
};

int cmd_falsify(const FalsifyArgs& fa) {
    const IneqId id = ineq_from(fa.ineq);
    const FunctionSpec family = parse_function_spec(fa.family);
    SweepConfig cfg;
    if (!fa.config.empty()) {
        cfg = load_sweep_config(fa.config);
    } else {
        cfg.alphas = fa.alphas;
        cfg.s_values = {0.25, 0.5, 0.75, 1.0};
        cfg.intervals = {{0.0, 1.0}};
        cfg.pq_pairs = {{2.0, 2.0}, {3.0, 1.5}, {4.0, 4.0 / 3.0}};
    }
    FalsifyOptions opt;
    opt.adversarial = fa.adversarial;
    const auto cex = falsify(id, family, cfg, fa.trials, fa.seed, opt);
    if (!cex) {
        std::cerr << "no counterexample in " << fa.trials << " trials\n";
        emit_report({}, fa.format, "-");
        return 0;
    }
    std::cerr << "counterexample at trial " << cex->trial << ", " << cex->shrink_steps
              << " shrinking steps (rows: sampled, shrunk)\n";
    emit_report({cex->initial, cex->shrunk}, fa.format, "-");
    return 1;
}

int cmd_quad_test(double alpha, int max_grade) {
    const AlphaContext ctx(alpha);
    const MomentFunctional J(ctx, max_grade);
    std::printf("alpha = %.17g  max_grade = %d  nodes = %d  cond = %.3e\n", alpha, max_grade,
                J.node_count(), J.condition());
    std::printf("%4s %24s %24s %11s %11s\n", "k", "exact", "numeric", "rel_err", "residual");
    bool ok = true;
    for (int k = 0; k <= max_grade; ++k) {
        const double exact = J.moments()[static_cast<std::size_t>(k)];
        const QuadResult res =
            fractal_integral_numeric([&](double t) { return std::pow(t, k * alpha); }, J);
        const double rel = std::fabs(res.value - exact) / std::fabs(exact);
        ok = ok && rel <= 1e-10;
        std::printf("%4d %24.17g %24.17g %11.3e %11.3e\n", k, exact, res.value, rel,
                    res.residual);
    }
    std::printf("moment exactness (1e-10): %s\n", ok ? "pass" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local fractional Hermite-Hadamard / Ostrowski inequality engine"};
    app.require_subcommand(1);

    double c_alpha = 1.0, c_s = 1.0;
    auto* constants = app.add_subcommand("constants", "Print the constants M(s, alpha), N(s, alpha)");
    constants->add_option("--alpha", c_alpha, "Fractal order in (0, 1]")->required();
    constants->add_option("--s", c_s, "s in (0, 1]")->required();

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate one inequality at one parameter point");
    eval->add_option("--ineq", ea.ineq, "Inequality id")->required();
    eval->add_option("--alpha", ea.alpha)->required();
    eval->add_option("--s", ea.s);
    eval->add_option("--p", ea.p);
    eval->add_option("--q", ea.q);
    eval->add_option("--a", ea.a)->required();
    eval->add_option("--b", ea.b)->required();
    eval->add_option("--x", ea.x);
    eval->add_option("--fn", ea.fn, "Function spec, e.g. mono:2 or poly:0,0,0,1")->required();
    eval->add_option("--gfn", ea.gfn, "Second function for holder and byparts");
    eval->add_option("--max-grade", ea.max_grade);
    eval->add_option("--format", ea.format)->transform(CLI::CheckedTransformer(kFormats));

    std::string sw_config, sw_out = "-";
    ReportFormat sw_format = ReportFormat::Csv;
    bool sw_parallel = false;
    unsigned sw_threads = 0;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
    sweep->add_option("--config", sw_config)->required();
    sweep->add_option("--out", sw_out, "Output path, - for stdout");
    sweep->add_option("--format", sw_format)->transform(CLI::CheckedTransformer(kFormats));
    sweep->add_flag("--parallel", sw_parallel);
    sweep->add_option("--threads", sw_threads);

    FalsifyArgs fa;
    auto* fals = app.add_subcommand("falsify", "Randomized search for a violation");
    fals->add_option("--ineq", fa.ineq)->required();
    fals->add_option("--family", fa.family, "Template function spec")->required();
    fals->add_option("--trials", fa.trials)->check(CLI::PositiveNumber);
    fals->add_option("--seed", fa.seed);
    fals->add_option("--alpha", fa.alphas, "Fractal orders to sample from");
    fals->add_option("--config", fa.config, "Sweep config supplying the parameter lists");
    fals->add_flag("--adversarial", fa.adversarial, "Signed coefficients");
    fals->add_option("--format", fa.format)->transform(CLI::CheckedTransformer(kFormats));

    double q_alpha = 1.0;
    int q_grade = MomentFunctional::kDefaultMaxGrade;
    auto* quad = app.add_subcommand("quad-test", "Check moment exactness of the numeric integral");
    quad->add_option("--alpha", q_alpha)->required();
    quad->add_option("--max-grade", q_grade);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*constants)
            return cmd_constants(c_alpha, c_s);
        if (*eval)
            return cmd_eval(ea);
        if (*sweep)
            return cmd_sweep(sw_config, sw_out, sw_format, sw_parallel, sw_threads);
        if (*fals)
            return cmd_falsify(fa);
        if (*quad)
            return cmd_quad_test(q_alpha, q_grade);
    } catch (const std::exception& e) {
        std::cerr << "lfc: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
