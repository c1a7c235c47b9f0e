#pragma once

// Evaluators for the Hermite-Hadamard, Holder and Ostrowski-type
// inequalities and the identity they are built on. Each returns both sides
// and the slack rhs - lhs; none of them asserts.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfc/alpha_num.hpp"
#include "lfc/convexity.hpp"
#include "lfc/fracpoly.hpp"
#include "lfc/quad.hpp"

namespace lfc {

struct OstrowskiConstants {
    double M = 0.0;  ///< J[t^{(s+2) alpha}]
    double N = 0.0;  ///< three-term Gamma-ratio constant paired with D(a), D(b)
    double s = 0.0;
    AlphaContext ctx{1.0};
};

OstrowskiConstants ostrowski_constants(double s, const AlphaContext& ctx);

enum class IneqId {
    Ghh,
    Shh,
    Holder,
    Ostrowski,
    Identity,
    Byparts,
    Thm1,
    Thm2,
    Thm3,
    MidpointThm1,
    MidpointThm2,
    MidpointThm3,
    ThetaThm1,
    ThetaThm2,
    ThetaThm3,
    MidpointThetaThm1,
    MidpointThetaThm2,
    MidpointThetaThm3,
};

inline constexpr int kIneqCount = 18;

std::string_view to_string(IneqId id);
/// Accepts the canonical names plus identity-residual-zero and
/// byparts-residual-zero.
std::optional<IneqId> parse_ineq_id(std::string_view text);
const std::vector<IneqId>& all_ineq_ids();

bool is_corollary(IneqId id);
bool is_midpoint_form(IneqId id);  ///< x is fixed at (a+b)/2 and not reported
/// 1, 2 or 3 for theorem-derived ids, 0 otherwise.
int parent_theorem(IneqId id);

struct IneqParams {
    std::optional<double> alpha, s, p, q, a, b, x;

    friend bool operator==(const IneqParams&, const IneqParams&) = default;
};

struct IneqReport {
    IneqId id = IneqId::Ghh;
    IneqParams params;
    std::string fn;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
    std::string notes;
};

/// Sets slack and holds from lhs, rhs and the tolerance.
void finalize(IneqReport& r, double slack_tol);

/// True when the report records a failed hypothesis check.
bool hypothesis_violated(const IneqReport& r);

struct EvalOptions {
    int theta_grid = 1025;
    bool check_hypothesis = true;
    int hypothesis_grid = 24;
    /// Skip the lattice check and use this verdict instead.
    std::optional<bool> hypothesis;
};

/// sup of |g| on [a, b]: grid maximum refined by golden section.
double sup_abs(const AlphaSeries& g, double a, double b, int grid);

/// Lattice check of t -> |f2|^q for generalized s-convexity on [a, b].
ConvexityVerdict theorem_hypothesis(const AlphaSeries& f2, double s, double q, double a, double b,
                                    int grid);

IneqReport eval_ghh(const AlphaSeries& f, double a, double b, const EvalOptions& opt = {});
IneqReport eval_shh(const AlphaSeries& f, double s, double a, double b,
                    const EvalOptions& opt = {});
IneqReport eval_holder(const RealFn& f, const RealFn& g, double p, double q, double a, double b,
                       const MomentFunctional& J);
IneqReport eval_ostrowski_classic(const AlphaSeries& f, double x, double a, double b,
                                  const EvalOptions& opt = {});

double identity_residual(const AlphaSeries& f, double x, double a, double b,
                         const MomentFunctional& J);
/// identity_residual as a report: lhs = residual, rhs = 0.
IneqReport eval_identity(const AlphaSeries& f, double x, double a, double b,
                         const MomentFunctional& J);
IneqReport eval_byparts(const AlphaSeries& f, const AlphaSeries& g, double a, double b);

IneqReport eval_thm1(const AlphaSeries& f, double s, double x, double a, double b,
                     const EvalOptions& opt = {});
IneqReport eval_thm2(const AlphaSeries& f, double s, double p, double q, double x, double a,
                     double b, const EvalOptions& opt = {});
IneqReport eval_thm3(const AlphaSeries& f, double s, double q, double x, double a, double b,
                     const EvalOptions& opt = {});

/// Corollary forms. x is ignored by the midpoint variants; p is read only by
/// the thm2 variants, q by the thm2 and thm3 variants.
IneqReport eval_corollary(IneqId variant, const AlphaSeries& f, double s, double p, double q,
                          double x, double a, double b, const EvalOptions& opt = {});

}  // namespace lfc
