#include "lfc/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace lfc {

namespace {

double weight(double t, double e) { return t == 0.0 ? (e == 0.0 ? 1.0 : 0.0) : std::pow(t, e); }

}  // namespace

double s_convexity_gap(const RealFn& f, double s, double x1, double x2, double lam,
                       const AlphaContext& ctx) {
    const double e = s * ctx.alpha();
    const double bound = weight(lam, e) * f(x1) + weight(1.0 - lam, e) * f(x2);
    return f(lam * x1 + (1.0 - lam) * x2) - bound;
}

ConvexityVerdict check_s_convex_second(const RealFn& f, double s, double lo, double hi,
                                       const AlphaContext& ctx, const LatticeOptions& opt) {
    if (!(lo >= 0.0) || !(lo < hi))
        throw std::invalid_argument("convexity check: need 0 <= lo < hi");
    if (opt.grid < 3)
        throw std::invalid_argument("convexity check: grid must be >= 3");
    if (!(s > 0.0) || !(s <= 1.0))
        throw std::invalid_argument("convexity check: s must lie in (0, 1]");

    const int n = opt.grid;
    const double e = s * ctx.alpha();
    std::vector<double> xs(static_cast<std::size_t>(n)), fx(xs.size());
    std::vector<double> lams(xs.size()), wl(xs.size()), wr(xs.size());
    ConvexityVerdict v;
    for (int i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        xs[u] = lo + (hi - lo) * i / (n - 1);
        fx[u] = f(xs[u]);
        if (fx[u] < 0.0)
            v.negative_values = true;
        lams[u] = (i + 1.0) / (n + 1.0);
        wl[u] = std::pow(lams[u], e);
        wr[u] = std::pow(1.0 - lams[u], e);
    }

    Witness worst{0.0, 0.0, 0.0, -HUGE_VAL};
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            for (std::size_t k = 0; k < lams.size(); ++k) {
                const double gap =
                    f(lams[k] * xs[i] + (1.0 - lams[k]) * xs[j]) - (wl[k] * fx[i] + wr[k] * fx[j]);
                if (gap > worst.gap)
                    worst = {xs[i], xs[j], lams[k], gap};
            }

    if (opt.refine_samples > 0) {
        std::mt19937_64 rng(opt.seed);
        const double hx = (hi - lo) / (n - 1);
        const double hl = 1.0 / (n + 1.0);
        for (int r = 0; r < opt.refine_samples; ++r) {
            std::uniform_real_distribution<double> jitter(-1.0, 1.0);
            const double x1 = std::clamp(worst.x1 + hx * jitter(rng), lo, hi);
            const double x2 = std::clamp(worst.x2 + hx * jitter(rng), lo, hi);
            const double lam = std::clamp(worst.lam + hl * jitter(rng), hl / 2, 1.0 - hl / 2);
            const double gap = s_convexity_gap(f, s, x1, x2, lam, ctx);
            if (gap > worst.gap)
                worst = {x1, x2, lam, gap};
        }
    }

    v.max_gap = worst.gap;
    if (worst.gap > ctx.slack_tol()) {
        v.holds_on_grid = false;
        v.witness = worst;
    }
    return v;
}

ConvexityVerdict check_generalized_convex(const RealFn& f, double lo, double hi,
                                          const AlphaContext& ctx, const LatticeOptions& opt) {
    return check_s_convex_second(f, 1.0, lo, hi, ctx, opt);
}

}  // namespace lfc
