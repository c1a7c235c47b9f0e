#include "lfc/ineq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "numfmt.hpp"

namespace lfc {

namespace {

constexpr std::array<std::string_view, kIneqCount> kNames = {
    "ghh",
    "shh",
    "holder",
    "ostrowski",
    "identity",
    "byparts",
    "thm1",
    "thm2",
    "thm3",
    "midpoint-thm1",
    "midpoint-thm2",
    "midpoint-thm3",
    "theta-thm1",
    "theta-thm2",
    "theta-thm3",
    "midpoint-theta-thm1",
    "midpoint-theta-thm2",
    "midpoint-theta-thm3",
};

constexpr std::string_view kHypothesisViolated = "hypothesis violated";

void require_interval(double a, double b) {
    if (!(a >= 0.0) || !(a < b) || !std::isfinite(b))
        throw std::domain_error("need 0 <= a < b, got a = " + detail::format_shortest(a) +
                                ", b = " + detail::format_shortest(b));
}

void require_point(double x, double a, double b) {
    if (!(x >= a) || !(x <= b))
        throw std::domain_error("x = " + detail::format_shortest(x) + " lies outside [a, b]");
}

void require_s(double s) {
    if (!(s > 0.0) || !(s <= 1.0))
        throw std::domain_error("s must lie in (0, 1], got " + detail::format_shortest(s));
}

void require_conjugate(double p, double q) {
    if (!(p > 1.0) || !(q > 1.0) || std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw std::domain_error("p and q must be conjugate exponents > 1");
}

void require_q(double q) {
    if (!(q >= 1.0) || !std::isfinite(q))
        throw std::domain_error("q must be >= 1, got " + detail::format_shortest(q));
}

void add_note(IneqReport& r, const std::string& note) {
    if (!r.notes.empty())
        r.notes += "; ";
    r.notes += note;
}

std::string witness_text(const Witness& w) {
    return "x1=" + detail::format_shortest(w.x1) + " x2=" + detail::format_shortest(w.x2) +
           " t=" + detail::format_shortest(w.lam) + " gap=" + detail::format_shortest(w.gap);
}

// Records a hypothesis verdict; what names the function that must be convex.
void note_verdict(IneqReport& r, const std::string& what, const ConvexityVerdict& v) {
    if (v.holds_on_grid)
        add_note(r, "hypothesis ok on grid");
    else
        add_note(r, std::string(kHypothesisViolated) + ": " + what + " (" +
                        witness_text(*v.witness) + ")");
    if (v.negative_values)
        add_note(r, "function takes negative values on grid");
}

void check_second_derivative_hypothesis(IneqReport& r, const AlphaSeries& f2, double s, double q,
                                        double a, double b, const EvalOptions& opt) {
    const std::string what = q == 1.0 ? "|f2a| not s-convex" : "|f2a|^q not s-convex";
    if (opt.hypothesis) {
        if (*opt.hypothesis)
            add_note(r, "hypothesis ok on grid");
        else
            add_note(r, std::string(kHypothesisViolated) + ": " + what);
        return;
    }
    if (!opt.check_hypothesis)
        return;
    note_verdict(r, what, theorem_hypothesis(f2, s, q, a, b, opt.hypothesis_grid));
}

IneqParams base_params(const AlphaContext& ctx, double a, double b) {
    IneqParams p;
    p.alpha = ctx.alpha();
    p.a = a;
    p.b = b;
    return p;
}

IneqReport start_report(IneqId id, const AlphaContext& ctx, double a, double b) {
    IneqReport r;
    r.id = id;
    r.params = base_params(ctx, a, b);
    return r;
}

// t -> (t)^e for t >= 0, with 0^0 = 1.
double upow(double t, double e) { return std::pow(t, e); }

// Pieces shared by the three theorems and their corollaries.
struct TheoremCore {
    double alpha = 1.0;
    double lhs = 0.0;
    double dx = 0.0, da = 0.0, db = 0.0;  // |f2a| at x, a, b
    double wl = 0.0, wr = 0.0;            // (x-a)^{3 alpha}, (b-x)^{3 alpha}
    double denom = 1.0;                   // Gamma(1+2 alpha) (b-a)^alpha
    double g2 = 1.0;                      // Gamma(1+2 alpha)
    double span = 1.0;                    // b - a
    AlphaSeries f2;
};

double mean_value(const AlphaSeries& f, double a, double b) {
    return lf_integral(f, a, b) / upow(b - a, f.context().alpha());
}

// |I/(b-a)^a - f(x)/G(1+a) + (2x-a-b)^a f1(x)/G(1+2a)|
double theorem_lhs(const AlphaSeries& f, double x, double a, double b) {
    const double alpha = f.context().alpha();
    double v = mean_value(f, a, b) - f(x) / gamma(1.0 + alpha);
    const double lever = signed_pow(2.0 * x - a - b, alpha);
    if (lever != 0.0)
        v += lever * lf_derivative(f)(x) / gamma(1.0 + 2.0 * alpha);
    return std::fabs(v);
}

TheoremCore theorem_core(const AlphaSeries& f, double x, double a, double b) {
    require_interval(a, b);
    require_point(x, a, b);
    const double alpha = f.context().alpha();
    TheoremCore c{.f2 = lf_derivative_n(f, 2)};
    c.alpha = alpha;
    c.lhs = theorem_lhs(f, x, a, b);
    c.dx = std::fabs(c.f2(x));
    c.da = std::fabs(c.f2(a));
    c.db = std::fabs(c.f2(b));
    c.wl = upow(x - a, 3.0 * alpha);
    c.wr = upow(b - x, 3.0 * alpha);
    c.g2 = gamma(1.0 + 2.0 * alpha);
    c.span = b - a;
    c.denom = c.g2 * upow(b - a, alpha);
    return c;
}

// w * v with 0 * inf = 0: a vanishing lever arm removes the term.
double lever_term(double w, double v) { return w == 0.0 ? 0.0 : w * v; }

double holder_constant(double s, double p, double q, double alpha) {
    return std::pow(gamma_ratio(1.0 + 2.0 * p * alpha, 1.0 + (2.0 * p + 1.0) * alpha), 1.0 / p) *
           std::pow(gamma_ratio(1.0 + s * alpha, 1.0 + (s + 1.0) * alpha), 1.0 / q);
}

double power_mean_constant(double q, double alpha) {
    return std::pow(gamma_ratio(1.0 + 2.0 * alpha, 1.0 + 3.0 * alpha), 1.0 - 1.0 / q);
}

// (m u^q + n v^q)^{1/q}, scaled by max(u, v) so large q does not overflow.
double weighted_qnorm(double m, double u, double n, double v, double q) {
    if (q == 1.0)
        return m * u + n * v;
    const double top = std::max(u, v);
    if (top == 0.0 || !std::isfinite(top))
        return top;
    return top * std::pow(m * std::pow(u / top, q) + n * std::pow(v / top, q), 1.0 / q);
}

double qnorm2(double u, double v, double q) { return weighted_qnorm(1.0, u, 1.0, v, q); }

double golden_max(const AlphaSeries& g, double lo, double hi) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto h = [&](double t) { return std::fabs(g(t)); };
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double hc = h(c), hd = h(d);
    for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
        if (hc > hd) {
            hi = d;
            d = c;
            hd = hc;
            c = hi - invphi * (hi - lo);
            hc = h(c);
        } else {
            lo = c;
            c = d;
            hc = hd;
            d = lo + invphi * (hi - lo);
            hd = h(d);
        }
    }
    return std::max(hc, hd);
}

}  // namespace

OstrowskiConstants ostrowski_constants(double s, const AlphaContext& ctx) {
    const double a = ctx.alpha();
    if (!(1.0 + s * a > 0.0))
        throw std::domain_error("ostrowski_constants: need 1 + s alpha > 0");
    OstrowskiConstants c;
    c.s = s;
    c.ctx = ctx;
    c.M = gamma_ratio(1.0 + (s + 2.0) * a, 1.0 + (s + 3.0) * a);
    c.N = gamma_ratio(1.0 + s * a, 1.0 + (s + 1.0) * a) -
          std::pow(2.0, a) * gamma_ratio(1.0 + (s + 1.0) * a, 1.0 + (s + 2.0) * a) + c.M;
    return c;
}

std::string_view to_string(IneqId id) { return kNames.at(static_cast<std::size_t>(id)); }

std::optional<IneqId> parse_ineq_id(std::string_view text) {
    if (text == "identity-residual-zero")
        return IneqId::Identity;
    if (text == "byparts-residual-zero")
        return IneqId::Byparts;
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == text)
            return static_cast<IneqId>(i);
    return std::nullopt;
}

const std::vector<IneqId>& all_ineq_ids() {
    static const std::vector<IneqId> ids = [] {
        std::vector<IneqId> v;
        for (int i = 0; i < kIneqCount; ++i)
            v.push_back(static_cast<IneqId>(i));
        return v;
    }();
    return ids;
}

bool is_corollary(IneqId id) { return id >= IneqId::MidpointThm1; }

bool is_midpoint_form(IneqId id) {
    switch (id) {
    case IneqId::MidpointThm1:
    case IneqId::MidpointThm2:
    case IneqId::MidpointThm3:
    case IneqId::MidpointThetaThm1:
    case IneqId::MidpointThetaThm2:
    case IneqId::MidpointThetaThm3:
        return true;
    default:
        return false;
    }
}

int parent_theorem(IneqId id) {
    switch (id) {
    case IneqId::Thm1:
    case IneqId::MidpointThm1:
    case IneqId::ThetaThm1:
    case IneqId::MidpointThetaThm1:
        return 1;
    case IneqId::Thm2:
    case IneqId::MidpointThm2:
    case IneqId::ThetaThm2:
    case IneqId::MidpointThetaThm2:
        return 2;
    case IneqId::Thm3:
    case IneqId::MidpointThm3:
    case IneqId::ThetaThm3:
    case IneqId::MidpointThetaThm3:
        return 3;
    default:
        return 0;
    }
}

void finalize(IneqReport& r, double slack_tol) {
    r.slack = r.rhs - r.lhs;
    r.holds = r.slack >= -slack_tol;
    if (std::isnan(r.slack))
        add_note(r, "non-finite slack");
}

bool hypothesis_violated(const IneqReport& r) {
    return r.notes.find(kHypothesisViolated) != std::string::npos;
}

double sup_abs(const AlphaSeries& g, double a, double b, int grid) {
    if (grid < 2)
        throw std::invalid_argument("sup_abs: grid must be >= 2");
    std::size_t best = 0;
    double best_v = -1.0;
    std::vector<double> xs(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const auto u = static_cast<std::size_t>(i);
        xs[u] = i + 1 == grid ? b : a + (b - a) * i / (grid - 1);
        const double v = std::fabs(g(xs[u]));
        if (std::isnan(v))
            return v;
        if (v > best_v) {
            best_v = v;
            best = u;
        }
    }
    if (std::isinf(best_v))
        return best_v;
    const double lo = xs[best == 0 ? 0 : best - 1];
    const double hi = xs[std::min(best + 1, xs.size() - 1)];
    return std::max(best_v, golden_max(g, lo, hi));
}

ConvexityVerdict theorem_hypothesis(const AlphaSeries& f2, double s, double q, double a, double b,
                                    int grid) {
    RealFn h = [&](double t) {
        const double v = std::fabs(f2(t));
        return q == 1.0 ? v : std::pow(v, q);
    };
    LatticeOptions lo;
    lo.grid = grid;
    return check_s_convex_second(h, s, a, b, f2.context(), lo);
}

IneqReport eval_ghh(const AlphaSeries& f, double a, double b, const EvalOptions& opt) {
    require_interval(a, b);
    const AlphaContext& ctx = f.context();
    const double alpha = ctx.alpha();
    const double left = f(0.5 * (a + b));
    const double mid = gamma(1.0 + alpha) * mean_value(f, a, b);
    const double right = (f(a) + f(b)) / std::pow(2.0, alpha);

    IneqReport r = start_report(IneqId::Ghh, ctx, a, b);
    if (mid - left <= right - mid) {
        r.lhs = left;
        r.rhs = mid;
    } else {
        r.lhs = mid;
        r.rhs = right;
    }
    add_note(r, "left=" + detail::format_17g(left) + " mid=" + detail::format_17g(mid) +
                    " right=" + detail::format_17g(right));
    if (opt.check_hypothesis) {
        LatticeOptions lo;
        lo.grid = opt.hypothesis_grid;
        note_verdict(r, "f not generalized convex",
                     check_generalized_convex([&](double t) { return f(t); }, a, b, ctx, lo));
    }
    finalize(r, ctx.slack_tol());
    return r;
}

IneqReport eval_shh(const AlphaSeries& f, double s, double a, double b, const EvalOptions& opt) {
    require_interval(a, b);
    require_s(s);
    const AlphaContext& ctx = f.context();
    const double alpha = ctx.alpha();
    const double left =
        std::pow(2.0, (s - 1.0) * alpha) / gamma(1.0 + alpha) * f(0.5 * (a + b));
    const double mid = mean_value(f, a, b);
    const double right = gamma_ratio(1.0 + s * alpha, 1.0 + (s + 1.0) * alpha) * (f(a) + f(b));

    IneqReport r = start_report(IneqId::Shh, ctx, a, b);
    r.params.s = s;
    if (mid - left <= right - mid) {
        r.lhs = left;
        r.rhs = mid;
    } else {
        r.lhs = mid;
        r.rhs = right;
    }
    add_note(r, "left=" + detail::format_17g(left) + " mid=" + detail::format_17g(mid) +
                    " right=" + detail::format_17g(right));
    if (opt.check_hypothesis) {
        LatticeOptions lo;
        lo.grid = opt.hypothesis_grid;
        note_verdict(r, "f not s-convex",
                     check_s_convex_second([&](double t) { return f(t); }, s, a, b, ctx, lo));
    }
    finalize(r, ctx.slack_tol());
    return r;
}

IneqReport eval_holder(const RealFn& f, const RealFn& g, double p, double q, double a, double b,
                       const MomentFunctional& J) {
    require_interval(a, b);
    require_conjugate(p, q);
    const AlphaContext& ctx = J.context();
    const double scale = upow(b - a, ctx.alpha());
    auto at = [&](double t) { return a + (b - a) * t; };

    const double jfg =
        fractal_integral_numeric([&](double t) { return std::fabs(f(at(t)) * g(at(t))); }, J).value;
    const double jfp =
        fractal_integral_numeric([&](double t) { return std::pow(std::fabs(f(at(t))), p); }, J)
            .value;
    const double jgq =
        fractal_integral_numeric([&](double t) { return std::pow(std::fabs(g(at(t))), q); }, J)
            .value;

    IneqReport r = start_report(IneqId::Holder, ctx, a, b);
    r.params.p = p;
    r.params.q = q;
    r.lhs = scale * jfg;
    r.rhs = scale * std::pow(std::max(jfp, 0.0), 1.0 / p) * std::pow(std::max(jgq, 0.0), 1.0 / q);
    finalize(r, ctx.slack_tol());
    return r;
}

IneqReport eval_ostrowski_classic(const AlphaSeries& f, double x, double a, double b,
                                  const EvalOptions& opt) {
    require_interval(a, b);
    require_point(x, a, b);
    const AlphaContext& ctx = f.context();
    const double alpha = ctx.alpha();
    const double theta1 = sup_abs(lf_derivative(f), a, b, opt.theta_grid);
    const double rel = std::fabs((x - 0.5 * (a + b)) / (b - a));

    IneqReport r = start_report(IneqId::Ostrowski, ctx, a, b);
    r.params.x = x;
    r.lhs = std::fabs(f(x) - gamma(1.0 + alpha) * mean_value(f, a, b));
    r.rhs = std::pow(2.0, alpha) * gamma_ratio(1.0 + alpha, 1.0 + 2.0 * alpha) *
            (std::pow(0.25, alpha) + std::pow(rel, 2.0 * alpha)) * upow(b - a, alpha) * theta1;
    add_note(r, "theta1=" + detail::format_17g(theta1));
    finalize(r, ctx.slack_tol());
    return r;
}

double identity_residual(const AlphaSeries& f, double x, double a, double b,
                         const MomentFunctional& J) {
    require_interval(a, b);
    require_point(x, a, b);
    const double alpha = f.context().alpha();
    const AlphaSeries f1 = lf_derivative(f);
    const AlphaSeries f2 = lf_derivative(f1);

    double lhs = mean_value(f, a, b) - f(x) / gamma(1.0 + alpha);
    const double lever = signed_pow(2.0 * x - a - b, alpha);
    if (lever != 0.0)
        lhs += lever * f1(x) / gamma(1.0 + 2.0 * alpha);

    const double wl = upow(x - a, 3.0 * alpha);
    const double wr = upow(b - x, 3.0 * alpha);
    double rhs = 0.0;
    if (wl != 0.0)
        rhs += wl * composed_moment(f2, 2.0, x, a, J);
    if (wr != 0.0)
        rhs += wr * composed_moment(f2, 2.0, x, b, J);
    rhs /= gamma(1.0 + alpha) * gamma(1.0 + 2.0 * alpha) * upow(b - a, alpha);
    return std::fabs(lhs - rhs);
}

IneqReport eval_identity(const AlphaSeries& f, double x, double a, double b,
                         const MomentFunctional& J) {
    IneqReport r = start_report(IneqId::Identity, f.context(), a, b);
    r.params.x = x;
    r.lhs = identity_residual(f, x, a, b, J);
    r.rhs = 0.0;
    finalize(r, f.context().slack_tol());
    return r;
}

IneqReport eval_byparts(const AlphaSeries& f, const AlphaSeries& g, double a, double b) {
    require_interval(a, b);
    IneqReport r = start_report(IneqId::Byparts, f.context(), a, b);
    r.lhs = byparts_residual(f, g, a, b);
    r.rhs = 0.0;
    finalize(r, f.context().slack_tol());
    return r;
}

IneqReport eval_thm1(const AlphaSeries& f, double s, double x, double a, double b,
                     const EvalOptions& opt) {
    require_s(s);
    const TheoremCore c = theorem_core(f, x, a, b);
    const OstrowskiConstants k = ostrowski_constants(s, f.context());

    IneqReport r = start_report(IneqId::Thm1, f.context(), a, b);
    r.params.s = s;
    r.params.x = x;
    r.lhs = c.lhs;
    r.rhs = (lever_term(c.wl, k.M * c.dx + k.N * c.da) + lever_term(c.wr, k.M * c.dx + k.N * c.db)) /
            c.denom;
    check_second_derivative_hypothesis(r, c.f2, s, 1.0, a, b, opt);
    finalize(r, f.context().slack_tol());
    return r;
}

IneqReport eval_thm2(const AlphaSeries& f, double s, double p, double q, double x, double a,
                     double b, const EvalOptions& opt) {
    require_s(s);
    require_conjugate(p, q);
    const TheoremCore c = theorem_core(f, x, a, b);

    IneqReport r = start_report(IneqId::Thm2, f.context(), a, b);
    r.params.s = s;
    r.params.p = p;
    r.params.q = q;
    r.params.x = x;
    r.lhs = c.lhs;
    r.rhs = holder_constant(s, p, q, c.alpha) *
            (lever_term(c.wl, qnorm2(c.dx, c.da, q)) + lever_term(c.wr, qnorm2(c.dx, c.db, q))) /
            c.denom;
    check_second_derivative_hypothesis(r, c.f2, s, q, a, b, opt);
    finalize(r, f.context().slack_tol());
    return r;
}

IneqReport eval_thm3(const AlphaSeries& f, double s, double q, double x, double a, double b,
                     const EvalOptions& opt) {
    require_s(s);
    require_q(q);
    const TheoremCore c = theorem_core(f, x, a, b);
    const OstrowskiConstants k = ostrowski_constants(s, f.context());

    IneqReport r = start_report(IneqId::Thm3, f.context(), a, b);
    r.params.s = s;
    r.params.q = q;
    r.params.x = x;
    r.lhs = c.lhs;
    r.rhs = power_mean_constant(q, c.alpha) *
            (lever_term(c.wl, weighted_qnorm(k.M, c.dx, k.N, c.da, q)) +
             lever_term(c.wr, weighted_qnorm(k.M, c.dx, k.N, c.db, q))) /
            c.denom;
    check_second_derivative_hypothesis(r, c.f2, s, q, a, b, opt);
    finalize(r, f.context().slack_tol());
    return r;
}

IneqReport eval_corollary(IneqId variant, const AlphaSeries& f, double s, double p, double q,
                          double x, double a, double b, const EvalOptions& opt) {
    if (!is_corollary(variant))
        throw std::invalid_argument("eval_corollary: " + std::string(to_string(variant)) +
                                    " is not a corollary variant");
    require_s(s);
    const int thm = parent_theorem(variant);
    if (thm == 2)
        require_conjugate(p, q);
    if (thm == 3)
        require_q(q);

    const bool midpoint = is_midpoint_form(variant);
    const double m = 0.5 * (a + b);
    const TheoremCore c = theorem_core(f, midpoint ? m : x, a, b);
    const OstrowskiConstants k = ostrowski_constants(s, f.context());
    const double alpha = c.alpha;
    const double span2 = upow(c.span, 2.0 * alpha);

    IneqReport r = start_report(variant, f.context(), a, b);
    r.params.s = s;
    if (thm == 2)
        r.params.p = p;
    if (thm >= 2)
        r.params.q = q;
    if (!midpoint)
        r.params.x = x;
    r.lhs = c.lhs;

    const bool theta_form = variant >= IneqId::ThetaThm1;
    if (!theta_form) {
        // Midpoint form after bounding |f2a|(m) by s-convexity.
        const double dsum = c.da + c.db;
        const double two_s = std::pow(2.0, s * alpha);
        if (thm == 1) {
            r.rhs = span2 / (std::pow(8.0, alpha) * c.g2) *
                    (std::pow(2.0, 1.0 - s * alpha) * k.M + k.N) * dsum;
        } else if (thm == 2) {
            r.rhs = holder_constant(s, p, q, alpha) * (1.0 + std::pow(1.0 + two_s, 1.0 / q)) *
                    span2 / (std::pow(2.0, (3.0 + s / q) * alpha) * c.g2) * dsum;
        } else {
            r.rhs = power_mean_constant(q, alpha) * span2 /
                    (std::pow(2.0, (3.0 + s / q) * alpha) * c.g2) *
                    (std::pow(k.M + two_s * k.N, 1.0 / q) + std::pow(k.M, 1.0 / q)) * dsum;
        }
        check_second_derivative_hypothesis(r, c.f2, s, thm == 1 ? 1.0 : q, a, b, opt);
    } else {
        const double theta = sup_abs(c.f2, a, b, opt.theta_grid);
        // 3^a [(b-a)^{2a}/12^a + |x-m|^{2a}], which is (b-a)^{2a}/4^a at x = m.
        const double bracket =
            midpoint ? span2 / std::pow(4.0, alpha)
                     : std::pow(3.0, alpha) * (span2 / std::pow(12.0, alpha) +
                                               upow(std::fabs(x - m), 2.0 * alpha));
        double factor = 0.0;
        if (thm == 1)
            factor = k.M + k.N;
        else if (thm == 2)
            factor = holder_constant(s, p, q, alpha) * std::pow(2.0, 1.0 / q);
        else
            factor = power_mean_constant(q, alpha) * std::pow(k.M + k.N, 1.0 / q);
        r.rhs = theta == 0.0 ? 0.0 : factor * theta * bracket / c.g2;
        add_note(r, "theta=" + detail::format_17g(theta));
    }
    finalize(r, f.context().slack_tol());
    return r;
}

}  // namespace lfc
