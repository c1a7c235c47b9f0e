#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfc/function_spec.hpp"
#include "lfc/ineq.hpp"

namespace lfc {

struct Tolerances {
    double slack_tol = AlphaContext::kDefaultSlackTol;
    double fp_tol = AlphaContext::kDefaultFpTol;
};

struct SweepConfig {
    std::vector<double> alphas;
    std::vector<double> s_values;
    std::vector<std::pair<double, double>> intervals;
    std::vector<double> x_fractions;
    std::vector<std::pair<double, double>> pq_pairs;
    std::vector<FunctionSpec> functions;
    std::vector<IneqId> inequalities;
    Tolerances tolerances;
    std::uint64_t seed = 0;
};

/// Parses the JSON config document. Unknown keys, wrong types and invalid
/// values throw std::invalid_argument.
SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::string& path);
void validate(const SweepConfig& cfg);

/// One parameter point. Absent optionals are inapplicable to the inequality.
struct EvalPoint {
    IneqId id = IneqId::Ghh;
    double alpha = 1.0;
    std::optional<double> s, p, q;
    double a = 0.0, b = 1.0;
    std::optional<double> x;
};

IneqParams params_of(const EvalPoint& pt);

/// Dispatches to the evaluator for pt.id. g overrides the second function of
/// holder (default |f^(alpha)|) and byparts (default f). J may be null.
IneqReport evaluate_point(const EvalPoint& pt, const AlphaSeries& f, const MomentFunctional* J,
                          const EvalOptions& opt, const AlphaSeries* g = nullptr);

/// Which axes an inequality ranges over.
struct Axes {
    bool s = false, pq = false, q_only = false, x = false;
};
Axes axes_of(IneqId id);

struct SweepOptions {
    bool parallel = false;
    unsigned threads = 0;  ///< 0 = hardware concurrency
    EvalOptions eval;
    int max_grade = 10;
};

/// Cartesian product over the applicable axes, sorted by (ineq, alpha, s, a,
/// b, x, function index, p, q). Per-point failures become error rows.
std::vector<IneqReport> run_sweep(const SweepConfig& cfg, const SweepOptions& opt = {});

/// Number of rows run_sweep produces for cfg.
std::size_t expected_row_count(const SweepConfig& cfg);

}  // namespace lfc
