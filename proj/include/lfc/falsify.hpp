#pragma once

// Seeded random search for violations, with shrinking toward a small
// witness.

#include <cstdint>
#include <optional>

#include "lfc/function_spec.hpp"
#include "lfc/ineq.hpp"
#include "lfc/sweep.hpp"

namespace lfc {

struct FalsifyOptions {
    bool adversarial = false;  ///< signed coefficients in [-2, 2] instead of [0.5, 2]
    int max_shrink_steps = 200;
    EvalOptions eval;
};

struct Counterexample {
    int trial = 0;            ///< zero-based index of the violating trial
    IneqReport initial;       ///< the violation as sampled
    IneqReport shrunk;        ///< after shrinking; still violates
    int shrink_steps = 0;     ///< accepted shrinking moves
};

/// Parameters come from the axis lists of cfg (functions and inequalities
/// are ignored); x is uniform on [a, b] when cfg.x_fractions is empty.
/// Coefficients of the family are scaled by independent random factors.
std::optional<Counterexample> falsify(IneqId id, const FunctionSpec& family,
                                      const SweepConfig& cfg, int trials, std::uint64_t seed,
                                      const FalsifyOptions& opt = {});

/// Re-evaluates a report's inequality at its recorded parameters.
IneqReport reevaluate(const IneqReport& r, const Tolerances& tol = {},
                      const EvalOptions& opt = {});

}  // namespace lfc
