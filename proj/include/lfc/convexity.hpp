#pragma once

// Lattice falsification of generalized convexity and of generalized
// s-convexity in the second sense,
//
//   f(t x1 + (1-t) x2) <= t^{s alpha} f(x1) + (1-t)^{s alpha} f(x2),
//
// with s = 1 giving plain generalized convexity. A passing verdict only means
// no violation was found on the lattice.

#include <cstdint>
#include <functional>
#include <optional>

#include "lfc/alpha_num.hpp"

namespace lfc {

struct Witness {
    double x1 = 0.0;
    double x2 = 0.0;
    double lam = 0.0;
    double gap = 0.0;  ///< f(lam x1 + (1-lam) x2) - bound, > slack_tol
};

struct ConvexityVerdict {
    bool holds_on_grid = true;
    std::optional<Witness> witness;  ///< present iff !holds_on_grid
    bool negative_values = false;    ///< f < 0 somewhere on the grid
    double max_gap = 0.0;            ///< largest gap seen, violation or not
};

struct LatticeOptions {
    int grid = 64;              ///< points per axis; lam uses j / (grid + 1)
    int refine_samples = 0;     ///< seeded random samples near the worst point
    std::uint64_t seed = 0;
};

using RealFn = std::function<double(double)>;

/// Gap of the defining inequality at one point, positive when violated.
double s_convexity_gap(const RealFn& f, double s, double x1, double x2, double lam,
                       const AlphaContext& ctx);

ConvexityVerdict check_s_convex_second(const RealFn& f, double s, double lo, double hi,
                                       const AlphaContext& ctx, const LatticeOptions& opt = {});

ConvexityVerdict check_generalized_convex(const RealFn& f, double lo, double hi,
                                          const AlphaContext& ctx,
                                          const LatticeOptions& opt = {});

}  // namespace lfc
