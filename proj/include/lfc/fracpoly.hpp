#pragma once

// The alpha-power-series algebra and its term-wise local fractional
// derivative and integral.
//
// A series is a finite sum  sum_k c_k x^{k alpha}  with real grades k. The
// derivative and integral act term by term through the monomial rules
//
//   D^alpha x^{k alpha} = Gamma(1 + k alpha) / Gamma(1 + (k-1) alpha) x^{(k-1) alpha}
//   aI_b x^{k alpha}    = Gamma(1 + k alpha) / Gamma(1 + (k+1) alpha)
//                         (b^{(k+1) alpha} - a^{(k+1) alpha})
//
// which are taken as the definitions; constants differentiate to zero.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfc/alpha_num.hpp"

namespace lfc {

struct Term {
    double grade = 0.0;
    double coeff = 0.0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Raised by lf_derivative when 1 + (k-1) alpha <= 0 for some grade k.
class GammaPoleError : public std::domain_error {
public:
    GammaPoleError(double grade, double gamma_argument);
    double grade() const noexcept { return grade_; }

private:
    double grade_;
};

class AlphaSeries {
public:
    explicit AlphaSeries(AlphaContext ctx, std::vector<Term> terms = {});

    static AlphaSeries monomial(const AlphaContext& ctx, double grade, double coeff = 1.0);
    static AlphaSeries constant(const AlphaContext& ctx, double c);

    const AlphaContext& context() const noexcept { return ctx_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Pointwise value, x >= 0.
    double operator()(double x) const;

    std::string to_string() const;

    friend bool operator==(const AlphaSeries&, const AlphaSeries&) = default;

private:
    AlphaContext ctx_;
    std::vector<Term> terms_;  // grades strictly increasing, no zero coefficients
};

AlphaSeries series_add(const AlphaSeries& f, const AlphaSeries& g);
AlphaSeries series_scale(const AlphaSeries& f, double c);
AlphaSeries series_mul(const AlphaSeries& f, const AlphaSeries& g);

inline AlphaSeries operator+(const AlphaSeries& f, const AlphaSeries& g) { return series_add(f, g); }
inline AlphaSeries operator-(const AlphaSeries& f, const AlphaSeries& g) {
    return series_add(f, series_scale(g, -1.0));
}
inline AlphaSeries operator*(const AlphaSeries& f, const AlphaSeries& g) { return series_mul(f, g); }
inline AlphaSeries operator*(double c, const AlphaSeries& f) { return series_scale(f, c); }

/// sum c x^{k alpha}; throws std::domain_error for x < 0. A negative grade
/// evaluated at 0 yields an infinity.
double series_eval(const AlphaSeries& f, double x);

AlphaSeries lf_derivative(const AlphaSeries& f);
AlphaSeries lf_derivative_n(const AlphaSeries& f, unsigned n);

/// aI_b f, the 1/Gamma(1+alpha)-normalized local fractional integral.
/// Exactly antisymmetric in (a, b); zero when a == b.
double lf_integral(const AlphaSeries& f, double a, double b);

/// | aI_b(f g^(alpha)) - [f g]_a^b + aI_b(f^(alpha) g) |
double byparts_residual(const AlphaSeries& f, const AlphaSeries& g, double a, double b);

}  // namespace lfc
