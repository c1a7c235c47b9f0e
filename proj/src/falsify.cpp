#include "lfc/falsify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lfc/report.hpp"

namespace lfc {

namespace {

// Uniform in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v, const char* what) {
    if (v.empty())
        throw std::invalid_argument(std::string("falsify: config has no ") + what);
    return v[static_cast<std::size_t>(rng() % v.size())];
}

struct Candidate {
    EvalPoint pt;
    std::vector<Term> terms;
    double x_fraction = 0.0;
};

IneqReport evaluate(const Candidate& c, const Tolerances& tol, const EvalOptions& opt) {
    const AlphaContext ctx(c.pt.alpha, tol.slack_tol, tol.fp_tol);
    const AlphaSeries f(ctx, c.terms);
    EvalPoint pt = c.pt;
    const Axes ax = axes_of(pt.id);
    if (ax.x)
        pt.x = c.x_fraction == 1.0 ? pt.b : pt.a + c.x_fraction * (pt.b - pt.a);
    IneqReport r;
    try {
        r = evaluate_point(pt, f, nullptr, opt);
        r.params = params_of(pt);
    } catch (const std::exception& e) {
        r = error_report(pt.id, params_of(pt), "", e.what());
    }
    r.fn = format_series_spec(f);
    return r;
}

bool violates(const IneqReport& r) { return !r.holds && !is_error(r); }

}  // namespace

std::optional<Counterexample> falsify(IneqId id, const FunctionSpec& family,
                                      const SweepConfig& cfg, int trials, std::uint64_t seed,
                                      const FalsifyOptions& opt) {
    if (trials < 1)
        throw std::invalid_argument("falsify: trials must be >= 1");
    validate(cfg);
    const Axes ax = axes_of(id);
    std::mt19937_64 rng(seed);
    std::vector<double> qs;
    for (auto [p, q] : cfg.pq_pairs)
        qs.push_back(q);

    for (int trial = 0; trial < trials; ++trial) {
        Candidate c;
        c.pt.id = id;
        c.pt.alpha = pick(rng, cfg.alphas, "alphas");
        std::tie(c.pt.a, c.pt.b) = pick(rng, cfg.intervals, "intervals");
        if (ax.s)
            c.pt.s = pick(rng, cfg.s_values, "s_values");
        if (ax.pq)
            std::tie(c.pt.p, c.pt.q) = pick(rng, cfg.pq_pairs, "pq_pairs");
        if (ax.q_only)
            c.pt.q = pick(rng, qs, "pq_pairs");
        if (ax.x)
            c.x_fraction = cfg.x_fractions.empty() ? unit(rng) : pick(rng, cfg.x_fractions, "x");

        const AlphaSeries base = family.to_series(AlphaContext(c.pt.alpha));
        for (const Term& t : base.terms()) {
            const double u = unit(rng);
            const double factor = opt.adversarial ? -2.0 + 4.0 * u : 0.5 + 1.5 * u;
            c.terms.push_back({t.grade, t.coeff * factor});
        }

        IneqReport r = evaluate(c, cfg.tolerances, opt.eval);
        if (!violates(r))
            continue;

        // Every inequality here is positively homogeneous in f, so the
        // sample is first rescaled to max |c| = 1.
        double cmax = 0.0;
        for (const Term& t : c.terms)
            cmax = std::max(cmax, std::fabs(t.coeff));
        if (cmax > 0.0 && cmax != 1.0) {
            Candidate next = c;
            for (Term& t : next.terms)
                t.coeff /= cmax;
            IneqReport nr = evaluate(next, cfg.tolerances, opt.eval);
            if (violates(nr)) {
                c = next;
                r = std::move(nr);
            }
        }

        Counterexample out;
        out.trial = trial;
        out.initial = r;
        int steps = 0;
        auto attempt = [&](const Candidate& next) {
            if (steps >= opt.max_shrink_steps)
                return false;
            IneqReport nr = evaluate(next, cfg.tolerances, opt.eval);
            if (!violates(nr))
                return false;
            c = next;
            r = std::move(nr);
            ++steps;
            return true;
        };
        // Jump straight to target, else halve the distance while it still fails.
        auto shrink_toward = [&](auto get, auto set, double target) {
            Candidate next = c;
            set(next, target);
            if (get(c) == target || attempt(next))
                return;
            for (;;) {
                next = c;
                const double v = 0.5 * (get(c) + target);
                if (std::fabs(v - get(c)) < 1e-6)
                    return;
                set(next, v);
                if (!attempt(next))
                    return;
            }
        };

        for (std::size_t j = 0; j + 1 < c.terms.size(); ++j)
            shrink_toward([j](const Candidate& k) { return k.terms[j].coeff; },
                          [j](Candidate& k, double v) { k.terms[j].coeff = v; }, 0.0);
        if (ax.x)
            shrink_toward([](const Candidate& k) { return k.x_fraction; },
                          [](Candidate& k, double v) { k.x_fraction = v; }, 0.5);
        shrink_toward([](const Candidate& k) { return k.pt.b - k.pt.a; },
                      [](Candidate& k, double v) { k.pt.b = k.pt.a + v; }, 1.0);
        out.shrunk = r;
        out.shrink_steps = steps;
        return out;
    }
    return std::nullopt;
}

IneqReport reevaluate(const IneqReport& r, const Tolerances& tol, const EvalOptions& opt) {
    const IneqParams& p = r.params;
    if (!p.alpha || !p.a || !p.b)
        throw std::invalid_argument("reevaluate: report lacks alpha, a or b");
    const AlphaContext ctx(*p.alpha, tol.slack_tol, tol.fp_tol);
    const AlphaSeries f = parse_function_spec(r.fn).to_series(ctx);
    EvalPoint pt{r.id, *p.alpha, p.s, p.p, p.q, *p.a, *p.b, p.x};
    IneqReport out = evaluate_point(pt, f, nullptr, opt);
    out.params = p;
    out.fn = r.fn;
    return out;
}

}  // namespace lfc
