#include <doctest.h>

#include <cmath>
#include <random>

#include "lfc/function_spec.hpp"

using namespace lfc;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_function_spec(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no error for '" << text << "'");
    return 0;
}

}  // namespace

TEST_CASE("grammar") {
    const AlphaContext c(0.5);
    const FunctionSpec m = parse_function_spec("mono:2");
    CHECK(m.kind == FunctionSpec::Kind::Mono);
    CHECK(m.to_series(c) == AlphaSeries::monomial(c, 2));
    CHECK(m.source == "mono:2");

    const FunctionSpec p = parse_function_spec("poly:0,0,0,1");
    CHECK(p.to_series(c) == AlphaSeries::monomial(c, 3));

    const FunctionSpec s = parse_function_spec("series:(0.5,2);(3,-1.25)");
    CHECK(s.to_series(c) == AlphaSeries(c, {{0.5, 2}, {3, -1.25}}));

    const FunctionSpec ml = parse_function_spec("ml:50");
    CHECK(ml.kind == FunctionSpec::Kind::MittagLeffler);
    const AlphaSeries mls = ml.to_series(c);
    CHECK(mls.size() == 50);
    CHECK(mls.terms()[0].grade == 0.0);
    CHECK(mls.terms()[0].coeff == 1.0);
    CHECK(mls.terms()[2].coeff == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(mls(1.0) == doctest::Approx(mittag_leffler(1.0, c)).epsilon(1e-12));

    CHECK(parse_function_spec("poly:1e-3,2.5E2").terms[1].coeff == 250.0);
}

TEST_CASE("errors carry position and expectation") {
    CHECK(error_position("") == 0);
    CHECK(error_position("cubic:3") == 0);
    CHECK(error_position("mono:") == 5);
    CHECK(error_position("mono:2x") == 6);
    CHECK(error_position("mono:-1") == 5);
    CHECK(error_position("poly:1,,2") == 7);
    CHECK(error_position("series:(1,2") == 11);
    CHECK(error_position("series:(-1,2)") == 8);
    CHECK(error_position("ml:0") == 3);
    CHECK(error_position("ml:2.5") == 4);
    CHECK(error_position("poly:inf") == 5);
    CHECK(error_position("poly:nan") == 5);
    CHECK(error_position(" mono:2") == 0);
    try {
        parse_function_spec("mono:-1");
    } catch (const ParseError& e) {
        CHECK(e.expected() == "non-negative grade");
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
    try {
        parse_function_spec("series:(1;2)");
    } catch (const ParseError& e) {
        CHECK(e.expected() == "','");
    }
}

TEST_CASE("round trip") {
    for (const char* text : {"mono:2", "mono:0.25", "poly:0,0,0,1", "poly:-0.5,1e-300,3",
                             "series:(0.5,2);(3,-1.25)", "series:(0,0)", "ml:7"}) {
        const FunctionSpec spec = parse_function_spec(text);
        CHECK(parse_function_spec(spec.format()) == spec);
    }
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int i = 0; i < 500; ++i) {
        FunctionSpec spec;
        spec.kind = FunctionSpec::Kind::Series;
        for (int j = 0; j < 4; ++j)
            spec.terms.push_back({std::fabs(u(rng)), u(rng)});
        CHECK(parse_function_spec(spec.format()) == spec);
    }
}

TEST_CASE("series text for arbitrary series") {
    const AlphaContext c(1.0);
    const AlphaSeries f(c, {{0.1, 1.0 / 3}, {2, -7}});
    CHECK(parse_function_spec(format_series_spec(f)).to_series(c) == f);
    CHECK(format_series_spec(AlphaSeries(c)) == "poly:0");
    CHECK(parse_function_spec("poly:0").to_series(c).is_zero());
}
