#pragma once

// Numeric evaluation of the normalized fractal integral on [0, 1],
//
//   J[g] = 1/Gamma(1+alpha) int_0^1 g(t) (dt)^alpha,
//
// for integrands outside the closed-form series algebra. J is fixed by its
// moments J[t^{k alpha}] = Gamma(1 + k alpha) / Gamma(1 + (k+1) alpha); the
// integrand is projected onto the Muntz basis {t^{k alpha}} by least squares
// and the projection is integrated exactly through those moments.
//
// The moments coincide with B(1 + k alpha, alpha) / Gamma(alpha), so J also
// has the kernel form  1/Gamma(alpha) int_0^1 (1-u)^{alpha-1} g(u) du. The
// projection remainder g - p is integrated in that form.

#include <functional>
#include <memory>
#include <vector>

#include "lfc/alpha_num.hpp"
#include "lfc/fracpoly.hpp"

namespace lfc {

using Integrand = std::function<double(double)>;

enum class Remainder {
    None,    ///< projection only
    Kernel,  ///< add the kernel-form integral of g - p
};

class MomentFunctional {
public:
    static constexpr int kDefaultMaxGrade = 10;
    static constexpr int kMaxGradeCap = 12;
    /// Condition number of the Muntz design matrix above which the ridge no
    /// longer keeps the fit meaningful.
    static constexpr double kConditionLimit = 1e12;

    /// nodes == 0 selects 4 * max_grade Chebyshev points.
    explicit MomentFunctional(AlphaContext ctx, int max_grade = kDefaultMaxGrade, int nodes = 0,
                              Remainder remainder = Remainder::Kernel);

    const AlphaContext& context() const noexcept { return ctx_; }
    int max_grade() const noexcept { return max_grade_; }
    int node_count() const noexcept { return static_cast<int>(nodes_.size()); }
    Remainder remainder() const noexcept { return remainder_; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& moments() const noexcept { return moments_; }
    double condition() const noexcept { return condition_; }

    /// Least-squares Muntz coefficients of the sampled values y (one per node).
    std::vector<double> fit(const std::vector<double>& y) const;

private:
    struct Factor;

    AlphaContext ctx_;
    int max_grade_;
    Remainder remainder_;
    std::vector<double> nodes_;
    std::vector<double> moments_;
    double condition_ = 0.0;
    std::shared_ptr<const Factor> factor_;
};

struct QuadResult {
    double value = 0.0;
    double residual = 0.0;    ///< root-mean-square fit residual on the nodes
    double correction = 0.0;  ///< remainder contribution included in value
};

QuadResult fractal_integral_numeric(const Integrand& g, const MomentFunctional& J);

/// J[g] through the kernel form alone (tanh-sinh quadrature). Independent of
/// the Muntz projection.
double kernel_integral(const Integrand& g, const AlphaContext& ctx, double tol = 1e-12);

enum class Modulus {
    Signed,    ///< phi(v) = v
    Absolute,  ///< phi(v) = |v|^qpow
};

/// J-value of t -> t^{w alpha} phi(f2(t x + (1-t) e)).
double composed_moment(const AlphaSeries& f2, double weight_grade, double x, double e,
                       const MomentFunctional& J, Modulus mode = Modulus::Signed,
                       double qpow = 1.0);

}  // namespace lfc
