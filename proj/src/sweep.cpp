#include "lfc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "lfc/report.hpp"
#include "numfmt.hpp"

namespace lfc {

namespace {

using json = nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) {
    throw std::invalid_argument("sweep config: " + msg);
}

std::vector<double> real_list(const json& j, const char* key) {
    if (!j.is_array())
        config_error(std::string("'") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const json& v : j) {
        if (!v.is_number())
            config_error(std::string("'") + key + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::pair<double, double>> pair_list(const json& j, const char* key) {
    if (!j.is_array())
        config_error(std::string("'") + key + "' must be an array of pairs");
    std::vector<std::pair<double, double>> out;
    for (const json& v : j) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            config_error(std::string("'") + key + "' entries must be [number, number]");
        out.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return out;
}

std::optional<double> req(const std::optional<double>& v, IneqId id, const char* name) {
    if (!v)
        throw std::invalid_argument(std::string(to_string(id)) + " needs parameter " + name);
    return v;
}

const MomentFunctional& functional_for(const EvalPoint& pt, const MomentFunctional* J,
                                       std::unique_ptr<MomentFunctional>& local) {
    if (J)
        return *J;
    local = std::make_unique<MomentFunctional>(AlphaContext(pt.alpha));
    return *local;
}

auto sort_key(const IneqReport& r, std::size_t fn_index) {
    const IneqParams& p = r.params;
    return std::make_tuple(static_cast<int>(r.id), p.alpha, p.s, p.a, p.b, p.x, fn_index, p.p,
                           p.q);
}

// Hypothesis verdicts shared by points that differ only in x or p.
struct HypothesisKey {
    std::size_t fn;
    double alpha, s, q, a, b;
    auto operator<=>(const HypothesisKey&) const = default;
};

bool needs_theorem_hypothesis(IneqId id) {
    return parent_theorem(id) != 0 && id < IneqId::ThetaThm1;
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        config_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        config_error("top level must be an object");

    SweepConfig cfg;
    for (const auto& [key, v] : doc.items()) {
        if (key == "alphas") {
            cfg.alphas = real_list(v, "alphas");
        } else if (key == "s_values") {
            cfg.s_values = real_list(v, "s_values");
        } else if (key == "intervals") {
            cfg.intervals = pair_list(v, "intervals");
        } else if (key == "x_fractions") {
            cfg.x_fractions = real_list(v, "x_fractions");
        } else if (key == "pq_pairs") {
            cfg.pq_pairs = pair_list(v, "pq_pairs");
        } else if (key == "functions") {
            if (!v.is_array())
                config_error("'functions' must be an array of strings");
            for (const json& f : v) {
                if (!f.is_string())
                    config_error("'functions' must contain only strings");
                try {
                    cfg.functions.push_back(parse_function_spec(f.get<std::string>()));
                } catch (const ParseError& e) {
                    config_error(e.what());
                }
            }
        } else if (key == "inequalities") {
            if (!v.is_array())
                config_error("'inequalities' must be an array of strings");
            for (const json& f : v) {
                if (!f.is_string())
                    config_error("'inequalities' must contain only strings");
                const auto id = parse_ineq_id(f.get<std::string>());
                if (!id)
                    config_error("unknown inequality '" + f.get<std::string>() + "'");
                cfg.inequalities.push_back(*id);
            }
        } else if (key == "tolerances") {
            if (!v.is_object())
                config_error("'tolerances' must be an object");
            for (const auto& [tk, tv] : v.items()) {
                if (!tv.is_number())
                    config_error("tolerance '" + tk + "' must be a number");
                if (tk == "slack_tol")
                    cfg.tolerances.slack_tol = tv.get<double>();
                else if (tk == "fp_tol")
                    cfg.tolerances.fp_tol = tv.get<double>();
                else
                    config_error("unknown tolerance '" + tk + "'");
            }
        } else if (key == "seed") {
            if (!v.is_number_unsigned())
                config_error("'seed' must be a non-negative integer");
            cfg.seed = v.get<std::uint64_t>();
        } else {
            config_error("unknown key '" + key + "'");
        }
    }
    validate(cfg);
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_sweep_config(ss.str());
}

void validate(const SweepConfig& cfg) {
    for (double a : cfg.alphas)
        if (!(a > 0.0) || !(a <= 1.0))
            config_error("alpha " + detail::format_shortest(a) + " outside (0, 1]");
    for (double s : cfg.s_values)
        if (!(s > 0.0) || !(s <= 1.0))
            config_error("s " + detail::format_shortest(s) + " outside (0, 1]");
    for (auto [a, b] : cfg.intervals)
        if (!(a >= 0.0) || !(a < b) || !std::isfinite(b))
            config_error("interval (" + detail::format_shortest(a) + ", " +
                         detail::format_shortest(b) + ") needs 0 <= a < b");
    for (double x : cfg.x_fractions)
        if (!(x >= 0.0) || !(x <= 1.0))
            config_error("x fraction " + detail::format_shortest(x) + " outside [0, 1]");
    for (auto [p, q] : cfg.pq_pairs)
        if (!(p > 1.0) || !(q > 1.0) || std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
            config_error("(p, q) = (" + detail::format_shortest(p) + ", " +
                         detail::format_shortest(q) + ") are not conjugate");
    if (!(cfg.tolerances.slack_tol >= 0.0) || !(cfg.tolerances.fp_tol >= 0.0))
        config_error("tolerances must be non-negative");
}

IneqParams params_of(const EvalPoint& pt) {
    IneqParams p;
    p.alpha = pt.alpha;
    p.s = pt.s;
    p.p = pt.p;
    p.q = pt.q;
    p.a = pt.a;
    p.b = pt.b;
    p.x = pt.x;
    return p;
}

Axes axes_of(IneqId id) {
    Axes ax;
    switch (id) {
    case IneqId::Ghh:
    case IneqId::Byparts:
        break;
    case IneqId::Shh:
        ax.s = true;
        break;
    case IneqId::Holder:
        ax.pq = true;
        break;
    case IneqId::Ostrowski:
    case IneqId::Identity:
        ax.x = true;
        break;
    default: {
        const int thm = parent_theorem(id);
        ax.s = true;
        ax.pq = thm == 2;
        ax.q_only = thm == 3;
        ax.x = !is_midpoint_form(id);
        break;
    }
    }
    return ax;
}

IneqReport evaluate_point(const EvalPoint& pt, const AlphaSeries& f, const MomentFunctional* J,
                          const EvalOptions& opt, const AlphaSeries* g) {
    std::unique_ptr<MomentFunctional> local;
    const IneqId id = pt.id;
    const double a = pt.a, b = pt.b;
    IneqReport r;
    switch (id) {
    case IneqId::Ghh:
        r = eval_ghh(f, a, b, opt);
        break;
    case IneqId::Shh:
        r = eval_shh(f, *req(pt.s, id, "s"), a, b, opt);
        break;
    case IneqId::Holder: {
        const AlphaSeries second = g ? *g : lf_derivative(f);
        r = eval_holder([&](double t) { return std::fabs(f(t)); },
                        [&](double t) { return std::fabs(second(t)); }, *req(pt.p, id, "p"),
                        *req(pt.q, id, "q"), a, b, functional_for(pt, J, local));
        break;
    }
    case IneqId::Ostrowski:
        r = eval_ostrowski_classic(f, *req(pt.x, id, "x"), a, b, opt);
        break;
    case IneqId::Identity:
        r = eval_identity(f, *req(pt.x, id, "x"), a, b, functional_for(pt, J, local));
        break;
    case IneqId::Byparts:
        r = eval_byparts(f, g ? *g : f, a, b);
        break;
    case IneqId::Thm1:
        r = eval_thm1(f, *req(pt.s, id, "s"), *req(pt.x, id, "x"), a, b, opt);
        break;
    case IneqId::Thm2:
        r = eval_thm2(f, *req(pt.s, id, "s"), *req(pt.p, id, "p"), *req(pt.q, id, "q"),
                      *req(pt.x, id, "x"), a, b, opt);
        break;
    case IneqId::Thm3:
        r = eval_thm3(f, *req(pt.s, id, "s"), *req(pt.q, id, "q"), *req(pt.x, id, "x"), a, b,
                      opt);
        break;
    default: {
        const int thm = parent_theorem(id);
        const double p = thm == 2 ? *req(pt.p, id, "p") : 0.0;
        const double q = thm >= 2 ? *req(pt.q, id, "q") : 1.0;
        const double x = is_midpoint_form(id) ? 0.5 * (a + b) : *req(pt.x, id, "x");
        r = eval_corollary(id, f, *req(pt.s, id, "s"), p, q, x, a, b, opt);
        break;
    }
    }
    return r;
}

std::vector<IneqReport> run_sweep(const SweepConfig& cfg, const SweepOptions& opt) {
    validate(cfg);

    struct Job {
        EvalPoint pt;
        std::size_t fn;
    };
    std::vector<Job> jobs;
    std::vector<double> qs;
    for (auto [p, q] : cfg.pq_pairs)
        if (std::find(qs.begin(), qs.end(), q) == qs.end())
            qs.push_back(q);

    for (IneqId id : cfg.inequalities) {
        const Axes ax = axes_of(id);
        const std::vector<std::optional<double>> none{std::nullopt};
        std::vector<std::optional<double>> s_axis = none, x_axis = none;
        if (ax.s)
            s_axis.assign(cfg.s_values.begin(), cfg.s_values.end());
        std::vector<std::pair<std::optional<double>, std::optional<double>>> pq_axis{
            {std::nullopt, std::nullopt}};
        if (ax.pq) {
            pq_axis.clear();
            for (auto [p, q] : cfg.pq_pairs)
                pq_axis.emplace_back(p, q);
        } else if (ax.q_only) {
            pq_axis.clear();
            for (double q : qs)
                pq_axis.emplace_back(std::nullopt, q);
        }
        for (double alpha : cfg.alphas)
            for (const auto& s : s_axis)
                for (auto [a, b] : cfg.intervals) {
                    if (ax.x) {
                        x_axis.clear();
                        for (double fr : cfg.x_fractions)
                            x_axis.emplace_back(fr == 1.0 ? b : a + fr * (b - a));
                    }
                    for (const auto& x : x_axis)
                        for (std::size_t fn = 0; fn < cfg.functions.size(); ++fn)
                            for (const auto& [p, q] : pq_axis)
                                jobs.push_back({{id, alpha, s, p, q, a, b, x}, fn});
                }
    }

    // Per-alpha contexts and functionals, built once and shared read-only.
    std::map<double, AlphaContext> contexts;
    std::map<double, std::shared_ptr<const MomentFunctional>> functionals;
    std::map<double, std::string> functional_errors;
    for (double alpha : cfg.alphas) {
        const AlphaContext ctx(alpha, cfg.tolerances.slack_tol, cfg.tolerances.fp_tol);
        contexts.emplace(alpha, ctx);
        try {
            functionals[alpha] = std::make_shared<const MomentFunctional>(ctx, opt.max_grade);
        } catch (const std::exception& e) {
            functional_errors[alpha] = e.what();
        }
    }

    std::map<HypothesisKey, std::optional<bool>> hypotheses;
    std::mutex hyp_mutex;
    auto hypothesis_for = [&](const Job& job, const AlphaSeries& f) -> std::optional<bool> {
        if (!opt.eval.check_hypothesis || !needs_theorem_hypothesis(job.pt.id))
            return std::nullopt;
        const double q = parent_theorem(job.pt.id) == 1 ? 1.0 : job.pt.q.value_or(1.0);
        const HypothesisKey key{job.fn, job.pt.alpha, *job.pt.s, q, job.pt.a, job.pt.b};
        {
            std::lock_guard lock(hyp_mutex);
            if (auto it = hypotheses.find(key); it != hypotheses.end())
                return it->second;
        }
        std::optional<bool> verdict;
        try {
            verdict = theorem_hypothesis(lf_derivative_n(f, 2), *job.pt.s, q, job.pt.a, job.pt.b,
                                         opt.eval.hypothesis_grid)
                          .holds_on_grid;
        } catch (const std::exception&) {
            // the evaluator reports the same failure
        }
        std::lock_guard lock(hyp_mutex);
        hypotheses.emplace(key, verdict);
        return verdict;
    };

    std::vector<IneqReport> rows(jobs.size());
    auto run_one = [&](std::size_t i) {
        const Job& job = jobs[i];
        const FunctionSpec& spec = cfg.functions[job.fn];
        try {
            const AlphaContext& ctx = contexts.at(job.pt.alpha);
            const AlphaSeries f = spec.to_series(ctx);
            const auto fit = functionals.find(job.pt.alpha);
            const MomentFunctional* J = fit == functionals.end() ? nullptr : fit->second.get();
            if (!J && (job.pt.id == IneqId::Holder || job.pt.id == IneqId::Identity))
                throw std::runtime_error(functional_errors.at(job.pt.alpha));
            EvalOptions eo = opt.eval;
            eo.hypothesis = hypothesis_for(job, f);
            rows[i] = evaluate_point(job.pt, f, J, eo);
            rows[i].params = params_of(job.pt);
            rows[i].fn = spec.source;
        } catch (const std::exception& e) {
            rows[i] = error_report(job.pt.id, params_of(job.pt), spec.source, e.what());
        }
    };

    if (opt.parallel && jobs.size() > 1) {
        unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
        n = static_cast<unsigned>(std::min<std::size_t>(n, jobs.size()));
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++)
                    run_one(i);
            });
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            run_one(i);
    }

    std::vector<std::size_t> order(jobs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return sort_key(rows[l], jobs[l].fn) < sort_key(rows[r], jobs[r].fn);
    });
    std::vector<IneqReport> sorted;
    sorted.reserve(rows.size());
    for (std::size_t i : order)
        sorted.push_back(std::move(rows[i]));
    return sorted;
}

std::size_t expected_row_count(const SweepConfig& cfg) {
    std::set<double> qs;
    for (auto [p, q] : cfg.pq_pairs)
        qs.insert(q);
    std::size_t total = 0;
    for (IneqId id : cfg.inequalities) {
        const Axes ax = axes_of(id);
        std::size_t n = cfg.alphas.size() * cfg.intervals.size() * cfg.functions.size();
        if (ax.s)
            n *= cfg.s_values.size();
        if (ax.pq)
            n *= cfg.pq_pairs.size();
        if (ax.q_only)
            n *= qs.size();
        if (ax.x)
            n *= cfg.x_fractions.size();
        total += n;
    }
    return total;
}

}  // namespace lfc
