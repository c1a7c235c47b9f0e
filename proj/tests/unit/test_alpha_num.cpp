#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lfc/alpha_num.hpp"
#include "support.hpp"

using namespace lfc;

TEST_CASE("context validates alpha and tolerances") {
    CHECK_NOTHROW(AlphaContext(1.0));
    CHECK_NOTHROW(AlphaContext(1e-3));
    CHECK_THROWS_AS(AlphaContext(0.0), std::invalid_argument);
    CHECK_THROWS_AS(AlphaContext(1.0000001), std::invalid_argument);
    CHECK_THROWS_AS(AlphaContext(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(AlphaContext(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(AlphaContext(0.5, 1e-9, -1.0), std::invalid_argument);
    const AlphaContext c(0.5);
    CHECK(c.slack_tol() == 1e-9);
    CHECK(c.fp_tol() == 1e-12);
}

TEST_CASE("alpha_add and alpha_mul act on bases") {
    CHECK(alpha_add(AlphaReal(2), AlphaReal(3)).base() == 5);
    CHECK(alpha_mul(AlphaReal(2), AlphaReal(3)).base() == 6);
    const AlphaReal a(1.75);
    CHECK((a + AlphaReal(0)).base() == a.base());
    CHECK((a + (-a)).base() == 0.0);
    CHECK((a * AlphaReal(1)).base() == a.base());
    CHECK((a * alpha_inv(a)).base() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(alpha_inv(AlphaReal(0)), std::domain_error);
    CHECK_THROWS_AS(AlphaReal{INFINITY}, std::invalid_argument);
    CHECK_THROWS_AS(alpha_mul(AlphaReal(1e200), AlphaReal(1e200)), std::overflow_error);
}

TEST_CASE("field axioms and order on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-100.0, 100.0);
    for (int i = 0; i < 2000; ++i) {
        const AlphaReal a(d(rng)), b(d(rng)), c(d(rng));
        CHECK((a + b).base() == (b + a).base());
        CHECK((a * b).base() == (b * a).base());
        const double lhs = (a * (b + c)).base();
        const double rhs = (a * b + a * c).base();
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(a.base() * b.base()), std::fabs(a.base() * c.base())}));
        CHECK(((a < b) == (a.base() < b.base())));
    }
}

TEST_CASE("signed power embedding") {
    const AlphaContext h(0.5);
    CHECK(alpha_pow_signed(1.0, h) == 1.0);
    CHECK(alpha_pow_signed(-4.0, h) == -2.0);
    CHECK(alpha_pow_signed(0.0, h) == 0.0);
    CHECK(AlphaReal(9).value(h) == 3.0);
    CHECK(signed_pow(0.0, 0.0) == 1.0);
    CHECK(std::isinf(signed_pow(0.0, -0.5)));
}

TEST_CASE("gamma known values") {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    CHECK(rel_err(lfc::gamma(1.0), 1.0) <= 1e-12);
    CHECK(rel_err(lfc::gamma(0.5), sqrt_pi) <= 1e-12);
    CHECK(rel_err(lfc::gamma(1.5), sqrt_pi / 2) <= 1e-12);
    CHECK(rel_err(lfc::gamma(4.0), 6.0) <= 1e-12);
    CHECK(rel_err(lfc::gamma(4.5), 11.6317283965674489) <= 1e-12);
    CHECK_THROWS_AS(lfc::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(lfc::gamma(-1.5), std::domain_error);
}

TEST_CASE("gamma agrees with tgamma on (0, 50]") {
    for (double x = 0.01; x <= 50.0; x += 0.37)
        CHECK(rel_err(lfc::gamma(x), std::tgamma(x)) <= 1e-10);
}

TEST_CASE("gamma recurrence on 0.1 .. 10") {
    for (int i = 1; i <= 100; ++i) {
        const double x = 0.1 * i;
        CHECK(std::fabs(lfc::gamma(x + 1) - x * lfc::gamma(x)) / lfc::gamma(x + 1) <= 1e-10);
    }
}

TEST_CASE("gamma_ratio survives large arguments") {
    CHECK(rel_err(gamma_ratio(5.0, 4.0), 4.0) <= 1e-12);
    CHECK(rel_err(gamma_ratio(201.0, 200.0), 200.0) <= 1e-9);
    CHECK(rel_err(log_gamma(200.0), std::lgamma(200.0)) <= 1e-12);
}

TEST_CASE("mittag_leffler values") {
    CHECK(mittag_leffler(0.0, AlphaContext(0.3)) == 1.0);
    CHECK(std::fabs(mittag_leffler(1.0, AlphaContext(1.0)) - std::numbers::e) <= 1e-10);
    // e erfc(-1)
    CHECK(std::fabs(mittag_leffler(1.0, AlphaContext(0.5)) - 5.00898008076228346630982459821) <=
          1e-12);
    double brute = 0.0;
    for (int k = 0; k < 200; ++k)
        brute += 1.0 / std::tgamma(1.0 + 0.5 * k);
    CHECK(std::fabs(mittag_leffler(1.0, AlphaContext(0.5)) - brute) <= 1e-8);
}

TEST_CASE("mittag_leffler at alpha 1 is exp and is monotone") {
    const AlphaContext one(1.0);
    for (double x = 0.0; x <= 5.0; x += 0.125)
        CHECK(rel_err(mittag_leffler(x, one), std::exp(x)) <= 1e-10);
    const AlphaContext c(0.4);
    double prev = 0.0;
    for (double x = 0.0; x <= 3.0; x += 0.05) {
        const double v = mittag_leffler(x, c);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("mittag_leffler term cap") {
    CHECK_THROWS_AS(mittag_leffler(50.0, AlphaContext(1.0), 1e-16, 20), std::runtime_error);
}
