#include <doctest.h>

#include <cmath>

#include "lfc/alpha_num.hpp"
#include "lfc/convexity.hpp"
#include "lfc/fracpoly.hpp"

using namespace lfc;

TEST_CASE("power x^{alpha p} is generalized convex") {
    for (double a : {0.5, 1.0}) {
        const AlphaContext c(a);
        const auto v = check_generalized_convex([&](double x) { return std::pow(x, 2 * a); }, 0,
                                                2, c, {32, 0, 0});
        CHECK(v.holds_on_grid);
        CHECK(!v.witness);
    }
}

TEST_CASE("truncated Mittag-Leffler is generalized convex on [0, 2]") {
    for (double a : {0.5, 1.0}) {
        const AlphaContext c(a);
        std::vector<Term> t;
        for (int k = 0; k < 40; ++k)
            t.push_back({double(k), 1 / std::tgamma(1 + k * a)});
        const AlphaSeries ml(c, t);
        CHECK(check_generalized_convex([&](double x) { return ml(x); }, 0, 2, c, {32, 0, 0})
                  .holds_on_grid);
    }
}

TEST_CASE("concave function yields a genuine witness") {
    const AlphaContext c(1.0);
    RealFn f = [](double x) { return -x * x; };
    const auto v = check_generalized_convex(f, 0, 1, c, {64, 0, 0});
    REQUIRE(!v.holds_on_grid);
    REQUIRE(v.witness);
    const Witness w = *v.witness;
    CHECK(w.gap > c.slack_tol());
    CHECK(std::fabs(w.gap - 0.25) <= 1e-3);
    CHECK(std::fabs(std::fabs(w.x1 - w.x2) - 1.0) <= 1e-12);
    CHECK(s_convexity_gap(f, 1.0, w.x1, w.x2, w.lam, c) == doctest::Approx(w.gap));
    CHECK(v.negative_values);
}

TEST_CASE("s = 1 coincides with generalized convexity") {
    const std::vector<RealFn> fs = {
        [](double x) { return x * x; },       [](double x) { return -x * x; },
        [](double x) { return std::sin(5 * x); }, [](double x) { return std::sqrt(x); },
        [](double) { return 1.0; },
    };
    for (double a : {0.4, 1.0}) {
        const AlphaContext c(a);
        for (const auto& f : fs)
            CHECK(check_s_convex_second(f, 1.0, 0, 1.5, c, {16, 0, 0}).holds_on_grid ==
                  check_generalized_convex(f, 0, 1.5, c, {16, 0, 0}).holds_on_grid);
    }
}

TEST_CASE("x^{s alpha} and constants are s-convex") {
    const AlphaContext c(0.5);
    CHECK(check_s_convex_second([](double x) { return std::pow(x, 0.25); }, 0.5, 0, 1, c, {64, 0, 0})
              .holds_on_grid);
    for (double s : {0.25, 0.5, 1.0})
        CHECK(check_s_convex_second([](double) { return 1.0; }, s, 0, 3, c, {24, 0, 0}).holds_on_grid);
}

TEST_CASE("nonnegative scaling keeps the verdict") {
    const AlphaContext c(0.7);
    RealFn f = [](double x) { return std::pow(x, 1.4) + 0.5; };
    const bool base = check_s_convex_second(f, 0.6, 0, 2, c, {20, 0, 0}).holds_on_grid;
    for (double k : {0.0, 0.3, 7.0})
        CHECK(check_s_convex_second([&](double x) { return k * f(x); }, 0.6, 0, 2, c, {20, 0, 0})
                  .holds_on_grid == base);
}

TEST_CASE("refinement is seeded and only raises the gap") {
    const AlphaContext c(1.0);
    RealFn f = [](double x) { return std::sin(4 * x); };
    const auto plain = check_generalized_convex(f, 0, 2, c, {8, 0, 0});
    const auto r1 = check_generalized_convex(f, 0, 2, c, {8, 500, 42});
    const auto r2 = check_generalized_convex(f, 0, 2, c, {8, 500, 42});
    CHECK(r1.max_gap >= plain.max_gap);
    CHECK(r1.max_gap == r2.max_gap);
    REQUIRE(r1.witness);
    CHECK(s_convexity_gap(f, 1.0, r1.witness->x1, r1.witness->x2, r1.witness->lam, c) ==
          doctest::Approx(r1.witness->gap));
}

TEST_CASE("argument checks") {
    const AlphaContext c(1.0);
    RealFn f = [](double x) { return x; };
    CHECK_THROWS_AS(check_generalized_convex(f, 1, 1, c), std::invalid_argument);
    CHECK_THROWS_AS(check_generalized_convex(f, -1, 1, c), std::invalid_argument);
    CHECK_THROWS_AS(check_generalized_convex(f, 0, 1, c, {2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(check_s_convex_second(f, 0.0, 0, 1, c), std::invalid_argument);
    CHECK_THROWS_AS(check_s_convex_second(f, 1.5, 0, 1, c), std::invalid_argument);
}
