#include "lfc/quad.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "numfmt.hpp"

namespace lfc {

struct MomentFunctional::Factor {
    Eigen::MatrixXd design;                  // m x (n+1), V_jk = t_j^{k alpha}
    Eigen::HouseholderQR<Eigen::MatrixXd> qr;  // of [V; mu I]
};

MomentFunctional::MomentFunctional(AlphaContext ctx, int max_grade, int nodes, Remainder remainder)
    : ctx_(ctx), max_grade_(max_grade), remainder_(remainder) {
    if (max_grade < 1 || max_grade > kMaxGradeCap)
        throw std::invalid_argument("MomentFunctional: max_grade must lie in [1, " +
                                    std::to_string(kMaxGradeCap) + "]");
    const int m = nodes == 0 ? 4 * max_grade : nodes;
    if (m < 2 * max_grade)
        throw std::invalid_argument("MomentFunctional: need at least 2 * max_grade nodes");

    const double alpha = ctx.alpha();
    const int cols = max_grade + 1;

    nodes_.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        nodes_[static_cast<std::size_t>(j)] =
            0.5 * (1.0 - std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * m)));

    moments_.resize(static_cast<std::size_t>(cols));
    for (int k = 0; k < cols; ++k)
        moments_[static_cast<std::size_t>(k)] = gamma_ratio(1.0 + k * alpha, 1.0 + (k + 1) * alpha);

    auto factor = std::make_shared<Factor>();
    factor->design.resize(m, cols);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < cols; ++k)
            factor->design(j, k) = std::pow(nodes_[static_cast<std::size_t>(j)], k * alpha);

    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(factor->design).singularValues();
    condition_ = sv(0) / sv(sv.size() - 1);
    if (!(condition_ <= kConditionLimit))
        throw std::runtime_error("MomentFunctional: Muntz basis is ill-conditioned (cond " +
                                 detail::format_17g(condition_) + " at alpha " +
                                 detail::format_shortest(alpha) +
                                 "); use a smaller max_grade");

    // Ridge at 1e-12 of the largest singular value.
    const double mu = 1e-12 * sv(0);
    Eigen::MatrixXd augmented(m + cols, cols);
    augmented.topRows(m) = factor->design;
    augmented.bottomRows(cols) = mu * Eigen::MatrixXd::Identity(cols, cols);
    factor->qr.compute(augmented);
    factor_ = std::move(factor);
}

std::vector<double> MomentFunctional::fit(const std::vector<double>& y) const {
    const int m = node_count();
    if (static_cast<int>(y.size()) != m)
        throw std::invalid_argument("MomentFunctional::fit: expected one sample per node");
    const int cols = max_grade_ + 1;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + cols);
    for (int j = 0; j < m; ++j)
        rhs(j) = y[static_cast<std::size_t>(j)];
    const Eigen::VectorXd c = factor_->qr.solve(rhs);
    return {c.data(), c.data() + c.size()};
}

double kernel_integral(const Integrand& g, const AlphaContext& ctx, double tol) {
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    const double alpha = ctx.alpha();
    // Boost passes the signed distance to the nearest endpoint as the second
    // argument; it is 1 - u exactly on the right half.
    auto weighted = [&](double u, double uc) {
        const double one_minus_u = uc > 0.0 ? uc : 1.0 - u;
        const double w = alpha == 1.0 ? 1.0 : std::pow(one_minus_u, alpha - 1.0);
        return w * g(u);
    };
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(weighted, 0.0, 1.0, tol, &error, &l1);
    if (!std::isfinite(value))
        throw std::domain_error("kernel_integral: integrand is not integrable on [0, 1]");
    return value / gamma(alpha);
}

QuadResult fractal_integral_numeric(const Integrand& g, const MomentFunctional& J) {
    const auto& nodes = J.nodes();
    std::vector<double> y(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        y[j] = g(nodes[j]);
        if (!std::isfinite(y[j]))
            throw std::domain_error("fractal_integral_numeric: integrand is not finite at t = " +
                                    detail::format_shortest(nodes[j]));
    }
    const std::vector<double> c = J.fit(y);
    const double alpha = J.context().alpha();

    auto projection = [&](double t) {
        double p = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k)
            p += c[k] * std::pow(t, static_cast<double>(k) * alpha);
        return p;
    };

    QuadResult out;
    for (std::size_t k = 0; k < c.size(); ++k)
        out.value += c[k] * J.moments()[k];
    double ss = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double r = projection(nodes[j]) - y[j];
        ss += r * r;
    }
    out.residual = std::sqrt(ss / static_cast<double>(nodes.size()));

    if (J.remainder() == Remainder::Kernel) {
        out.correction = kernel_integral([&](double t) { return g(t) - projection(t); },
                                         J.context());
        out.value += out.correction;
    }
    return out;
}

double composed_moment(const AlphaSeries& f2, double weight_grade, double x, double e,
                       const MomentFunctional& J, Modulus mode, double qpow) {
    if (!(x >= 0.0) || !(e >= 0.0))
        throw std::domain_error("composed_moment: x and e must be >= 0");
    if (mode == Modulus::Absolute && !(qpow >= 1.0))
        throw std::invalid_argument("composed_moment: qpow must be >= 1");
    if (!(f2.context() == J.context()))
        throw std::invalid_argument("composed_moment: series and functional differ in alpha");
    if (f2.is_zero())
        return 0.0;

    const double w = weight_grade * J.context().alpha();
    auto integrand = [&](double t) {
        const double v = series_eval(f2, t * x + (1.0 - t) * e);
        double phi = v;
        if (mode == Modulus::Absolute)
            phi = qpow == 1.0 ? std::fabs(v) : std::pow(std::fabs(v), qpow);
        return std::pow(t, w) * phi;
    };
    return fractal_integral_numeric(integrand, J).value;
}

}  // namespace lfc
