#include "lfc/alpha_num.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lfc {

AlphaContext::AlphaContext(double alpha, double slack_tol, double fp_tol)
    : alpha_(alpha), slack_tol_(slack_tol), fp_tol_(fp_tol) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1], got " + std::to_string(alpha));
    if (!(slack_tol > 0.0) || !std::isfinite(slack_tol))
        throw std::invalid_argument("slack_tol must be positive");
    if (!(fp_tol > 0.0) || !std::isfinite(fp_tol))
        throw std::invalid_argument("fp_tol must be positive");
}

AlphaReal::AlphaReal(double base) : base_(base) {
    if (!std::isfinite(base))
        throw std::invalid_argument("AlphaReal base must be finite");
}

double AlphaReal::value(const AlphaContext& ctx) const noexcept {
    return alpha_pow_signed(base_, ctx);
}

namespace {

AlphaReal checked(double base, const char* op) {
    if (!std::isfinite(base))
        throw std::overflow_error(std::string("alpha_") + op + ": result base is not finite");
    return AlphaReal(base);
}

}  // namespace

AlphaReal alpha_add(AlphaReal x, AlphaReal y) { return checked(x.base() + y.base(), "add"); }
AlphaReal alpha_mul(AlphaReal x, AlphaReal y) { return checked(x.base() * y.base(), "mul"); }
AlphaReal alpha_neg(AlphaReal x) { return AlphaReal(-x.base()); }

AlphaReal alpha_inv(AlphaReal x) {
    if (x.base() == 0.0)
        throw std::domain_error("alpha_inv: 0^alpha has no multiplicative inverse");
    return checked(1.0 / x.base(), "inv");
}

double signed_pow(double u, double e) {
    if (u == 0.0)
        return e > 0.0 ? 0.0 : (e == 0.0 ? 1.0 : HUGE_VAL);
    const double mag = std::pow(std::fabs(u), e);
    return u < 0.0 ? -mag : mag;
}

double alpha_pow_signed(double u, const AlphaContext& ctx) { return signed_pow(u, ctx.alpha()); }

// ---------------------------------------------------------------------------
// Gamma

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series for Gamma(z + 1), z >= -0.5.
double lanczos_sum(double z) {
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        a += kLanczos[i] / (z + static_cast<double>(i));
    return a;
}

constexpr double kRatioLogSwitch = 150.0;

}  // namespace

double gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma: argument must be positive (pole or undefined), got " +
                                std::to_string(x));
    if (x < 0.5)
        return gamma(x + 1.0) / x;
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    // t^(z+0.5) split in two halves so that arguments up to ~171 do not
    // overflow before the exponential damps them.
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    if (x < 0.5)
        return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

double gamma_ratio(double x, double y) {
    if (x <= kRatioLogSwitch && y <= kRatioLogSwitch)
        return gamma(x) / gamma(y);
    return std::exp(log_gamma(x) - log_gamma(y));
}

// ---------------------------------------------------------------------------
// Mittag-Leffler

double mittag_leffler(double x, const AlphaContext& ctx, double tol, std::size_t max_terms) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("mittag_leffler: argument must be finite and >= 0");
    if (!(tol > 0.0))
        throw std::invalid_argument("mittag_leffler: tol must be positive");
    if (x == 0.0)
        return 1.0;

    const double alpha = ctx.alpha();
    const double log_x = std::log(x);
    double sum = 0.0;
    double prev = 0.0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        const double ka = static_cast<double>(k) * alpha;
        const double term = (1.0 + ka <= kRatioLogSwitch)
                                ? std::pow(x, ka) / gamma(1.0 + ka)
                                : std::exp(ka * log_x - log_gamma(1.0 + ka));
        // log(term) is concave in k, so once terms decrease they keep
        // decreasing and the first small term past the peak ends the sum.
        if (k > 0 && term < tol && term <= prev)
            return sum;
        sum += term;
        prev = term;
    }
    throw std::runtime_error("mittag_leffler: series did not reach tolerance within " +
                             std::to_string(max_terms) + " terms");
}

}  // namespace lfc
