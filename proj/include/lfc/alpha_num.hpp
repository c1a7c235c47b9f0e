#pragma once

// Scalar substrate: the fractal order, numbers of R^alpha, Gamma and
// Mittag-Leffler.

#include <compare>
#include <cstddef>

namespace lfc {

/// Fractal order alpha in (0, 1] plus the global tolerances used by the
/// verification layer. Every other type in the library carries one.
class AlphaContext {
public:
    static constexpr double kDefaultSlackTol = 1e-9;
    static constexpr double kDefaultFpTol = 1e-12;

    explicit AlphaContext(double alpha,
                          double slack_tol = kDefaultSlackTol,
                          double fp_tol = kDefaultFpTol);

    double alpha() const noexcept { return alpha_; }
    double slack_tol() const noexcept { return slack_tol_; }
    double fp_tol() const noexcept { return fp_tol_; }

    friend bool operator==(const AlphaContext&, const AlphaContext&) = default;

private:
    double alpha_;
    double slack_tol_;
    double fp_tol_;
};

/// An element a^alpha of R^alpha, stored by its base a.
///
/// The map a -> a^alpha is a field isomorphism under the alpha-sum and
/// alpha-product, so all arithmetic happens on the base and is exact up to
/// ordinary floating point. The numeric value a^alpha is only produced on
/// request through value().
class AlphaReal {
public:
    constexpr AlphaReal() = default;
    explicit AlphaReal(double base);

    double base() const noexcept { return base_; }

    /// Numeric embedding sgn(a)|a|^alpha.
    double value(const AlphaContext& ctx) const noexcept;

    friend bool operator==(AlphaReal x, AlphaReal y) noexcept { return x.base_ == y.base_; }
    friend std::partial_ordering operator<=>(AlphaReal x, AlphaReal y) noexcept {
        return x.base_ <=> y.base_;
    }

private:
    double base_ = 0.0;
};

AlphaReal alpha_add(AlphaReal x, AlphaReal y);
AlphaReal alpha_mul(AlphaReal x, AlphaReal y);
AlphaReal alpha_neg(AlphaReal x);
/// Multiplicative inverse (1/a)^alpha; throws std::domain_error for 0^alpha.
AlphaReal alpha_inv(AlphaReal x);

inline AlphaReal operator+(AlphaReal x, AlphaReal y) { return alpha_add(x, y); }
inline AlphaReal operator*(AlphaReal x, AlphaReal y) { return alpha_mul(x, y); }
inline AlphaReal operator-(AlphaReal x) { return alpha_neg(x); }
inline AlphaReal operator-(AlphaReal x, AlphaReal y) { return alpha_add(x, alpha_neg(y)); }

/// sgn(u)|u|^e. Negative bases use the odd extension.
double signed_pow(double u, double e);

/// sgn(u)|u|^alpha for the context's alpha.
double alpha_pow_signed(double u, const AlphaContext& ctx);

/// Gamma(x) for x > 0 (Lanczos, g = 7, n = 9). Throws std::domain_error
/// for x <= 0.
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(x) / Gamma(y), switching to log space when either value would
/// overflow.
double gamma_ratio(double x, double y);

/// E_alpha(x^alpha) = sum_k x^{alpha k} / Gamma(1 + k alpha), truncated at
/// the first term (past the peak of the term sequence) smaller than tol.
/// Throws std::runtime_error when max_terms is reached first.
double mittag_leffler(double x, const AlphaContext& ctx, double tol = 1e-16,
                      std::size_t max_terms = 10'000);

}  // namespace lfc
