#include "lfc/fracpoly.hpp"

#include <algorithm>
#include <cmath>

#include "numfmt.hpp"

namespace lfc {

namespace {

// Grades that differ by rounding noise (0.1 + 0.2 vs 0.3) are one grade.
bool same_grade(double k1, double k2) {
    return std::fabs(k1 - k2) <= 1e-12 * std::max(1.0, std::fabs(k1));
}

std::vector<Term> normalize(std::vector<Term> terms) {
    for (const Term& t : terms) {
        if (!std::isfinite(t.grade))
            throw std::invalid_argument("AlphaSeries: grade must be finite");
        if (!std::isfinite(t.coeff))
            throw std::invalid_argument("AlphaSeries: coefficient must be finite");
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& l, const Term& r) { return l.grade < r.grade; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const Term& t : terms) {
        if (!out.empty() && same_grade(out.back().grade, t.grade))
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0.0; });
    return out;
}

void require_same_context(const AlphaSeries& f, const AlphaSeries& g) {
    if (!(f.context() == g.context()))
        throw std::invalid_argument("AlphaSeries operands carry different alpha contexts");
}

}  // namespace

GammaPoleError::GammaPoleError(double grade, double gamma_argument)
    : std::domain_error("lf_derivative: Gamma pole at grade " + detail::format_shortest(grade) +
                        " (argument 1+(k-1)alpha = " + detail::format_shortest(gamma_argument) +
                        " <= 0)"),
      grade_(grade) {}

AlphaSeries::AlphaSeries(AlphaContext ctx, std::vector<Term> terms)
    : ctx_(ctx), terms_(normalize(std::move(terms))) {}

AlphaSeries AlphaSeries::monomial(const AlphaContext& ctx, double grade, double coeff) {
    return AlphaSeries(ctx, {{grade, coeff}});
}

AlphaSeries AlphaSeries::constant(const AlphaContext& ctx, double c) {
    return AlphaSeries(ctx, {{0.0, c}});
}

double AlphaSeries::operator()(double x) const { return series_eval(*this, x); }

std::string AlphaSeries::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty())
            out += " + ";
        out += detail::format_shortest(t.coeff);
        if (t.grade != 0.0)
            out += "*x^(" + detail::format_shortest(t.grade) + "a)";
    }
    return out;
}

AlphaSeries series_add(const AlphaSeries& f, const AlphaSeries& g) {
    require_same_context(f, g);
    std::vector<Term> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return AlphaSeries(f.context(), std::move(terms));
}

AlphaSeries series_scale(const AlphaSeries& f, double c) {
    if (!std::isfinite(c))
        throw std::invalid_argument("series_scale: factor must be finite");
    std::vector<Term> terms = f.terms();
    for (Term& t : terms)
        t.coeff *= c;
    return AlphaSeries(f.context(), std::move(terms));
}

AlphaSeries series_mul(const AlphaSeries& f, const AlphaSeries& g) {
    require_same_context(f, g);
    std::vector<Term> terms;
    terms.reserve(f.size() * g.size());
    for (const Term& u : f.terms())
        for (const Term& v : g.terms())
            terms.push_back({u.grade + v.grade, u.coeff * v.coeff});
    return AlphaSeries(f.context(), std::move(terms));
}

double series_eval(const AlphaSeries& f, double x) {
    if (!(x >= 0.0))
        throw std::domain_error("series_eval: x must be >= 0, got " + detail::format_shortest(x));
    const double alpha = f.context().alpha();
    double sum = 0.0;
    for (const Term& t : f.terms())
        sum += t.coeff * std::pow(x, t.grade * alpha);
    return sum;
}

AlphaSeries lf_derivative(const AlphaSeries& f) {
    const double alpha = f.context().alpha();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) {
        if (t.grade == 0.0)
            continue;  // constants are annihilated
        const double lower = 1.0 + (t.grade - 1.0) * alpha;
        if (!(lower > 0.0))
            throw GammaPoleError(t.grade, lower);
        const double factor = gamma_ratio(1.0 + t.grade * alpha, lower);
        out.push_back({t.grade - 1.0, t.coeff * factor});
    }
    return AlphaSeries(f.context(), std::move(out));
}

AlphaSeries lf_derivative_n(const AlphaSeries& f, unsigned n) {
    AlphaSeries out = f;
    for (unsigned i = 0; i < n; ++i)
        out = lf_derivative(out);
    return out;
}

double lf_integral(const AlphaSeries& f, double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw std::domain_error("lf_integral: endpoints must be >= 0");
    if (a == b)
        return 0.0;
    const double alpha = f.context().alpha();
    double sum = 0.0;
    for (const Term& t : f.terms()) {
        const double lower = 1.0 + t.grade * alpha;
        if (!(lower > 0.0))
            throw std::domain_error("lf_integral: grade " + detail::format_shortest(t.grade) +
                                    " has no finite integral (1 + k alpha <= 0)");
        const double e = (t.grade + 1.0) * alpha;
        if (e <= 0.0 && (a == 0.0 || b == 0.0))
            throw std::domain_error("lf_integral: grade " + detail::format_shortest(t.grade) +
                                    " diverges at 0");
        const double ratio = gamma_ratio(lower, 1.0 + e);
        sum += t.coeff * ratio * (signed_pow(b, e) - signed_pow(a, e));
    }
    return sum;
}

double byparts_residual(const AlphaSeries& f, const AlphaSeries& g, double a, double b) {
    require_same_context(f, g);
    const double lhs = lf_integral(f * lf_derivative(g), a, b);
    const double boundary = f(b) * g(b) - f(a) * g(a);
    const double tail = lf_integral(lf_derivative(f) * g, a, b);
    return std::fabs(lhs - boundary + tail);
}

}  // namespace lfc
