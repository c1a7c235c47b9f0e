#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lfc/report.hpp"
#include "lfc/sweep.hpp"

using namespace lfc;

namespace {

SweepConfig base_config() {
    return parse_sweep_config(R"({
        "alphas": [1],
        "s_values": [1],
        "intervals": [[0, 1]],
        "x_fractions": [0.5],
        "pq_pairs": [[2, 2]],
        "functions": ["poly:0,0,0,1"],
        "inequalities": ["thm1"],
        "tolerances": {"slack_tol": 1e-9, "fp_tol": 1e-12},
        "seed": 7
    })");
}

}  // namespace

TEST_CASE("single theorem row") {
    const auto rows = run_sweep(base_config());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].id == IneqId::Thm1);
    CHECK(rows[0].fn == "poly:0,0,0,1");
    CHECK(std::fabs(rows[0].lhs - 0.125) <= 1e-12);
    CHECK(std::fabs(rows[0].rhs - 0.125) <= 1e-12);
    CHECK(rows[0].holds);
    CHECK(rows[0].params.x == 0.5);
    CHECK(!rows[0].params.p);
}

TEST_CASE("cardinality") {
    SweepConfig cfg = base_config();
    cfg.functions.clear();
    CHECK(run_sweep(cfg).empty());
    CHECK(expected_row_count(cfg) == 0);

    cfg = base_config();
    cfg.alphas = {0.5, 1};
    cfg.functions = {parse_function_spec("mono:2"), parse_function_spec("mono:3")};
    CHECK(run_sweep(cfg).size() == 4);

    cfg.s_values = {0.25, 0.5, 1};
    cfg.x_fractions = {0, 0.5, 1};
    cfg.pq_pairs = {{2, 2}, {3, 1.5}, {4, 4.0 / 3}};
    cfg.intervals = {{0, 1}, {0.5, 2}};
    cfg.inequalities = all_ineq_ids();
    const auto rows = run_sweep(cfg);
    CHECK(rows.size() == expected_row_count(cfg));
    // per (alpha, interval, fn): ghh 1, shh 3, holder 3, ostrowski 3, identity 3,
    // byparts 1, thm1 9, thm2 27, thm3 27, midpoint 3+9+9, theta 9+27+27,
    // midpoint-theta 3+9+9
    CHECK(expected_row_count(cfg) == 8u * (1 + 3 + 3 + 3 + 3 + 1 + 9 + 27 + 27 + 21 + 63 + 21));
}

TEST_CASE("axes") {
    CHECK(!axes_of(IneqId::Ghh).s);
    CHECK(axes_of(IneqId::Shh).s);
    CHECK(axes_of(IneqId::Holder).pq);
    CHECK(axes_of(IneqId::Identity).x);
    CHECK(axes_of(IneqId::Thm3).q_only);
    CHECK(!axes_of(IneqId::Thm3).pq);
    CHECK(!axes_of(IneqId::MidpointThm2).x);
    CHECK(axes_of(IneqId::ThetaThm2).x);
}

TEST_CASE("ordering and determinism") {
    SweepConfig cfg = base_config();
    cfg.alphas = {1, 0.5};
    cfg.s_values = {0.75, 0.25};
    cfg.x_fractions = {1, 0, 0.5};
    cfg.functions = {parse_function_spec("mono:3"), parse_function_spec("mono:2")};
    cfg.inequalities = {IneqId::Thm2, IneqId::Ghh, IneqId::Thm1};
    cfg.pq_pairs = {{3, 1.5}, {2, 2}};
    const auto serial = run_sweep(cfg);
    SweepOptions par;
    par.parallel = true;
    par.threads = 4;
    const auto parallel = run_sweep(cfg, par);
    CHECK(to_csv(serial) == to_csv(parallel));
    CHECK(to_json(serial) == to_json(run_sweep(cfg)));

    CHECK(serial.front().id == IneqId::Ghh);
    CHECK(serial.back().id == IneqId::Thm2);
    for (std::size_t i = 1; i < serial.size(); ++i) {
        const auto& l = serial[i - 1];
        const auto& r = serial[i];
        CHECK(l.id <= r.id);
        if (l.id == r.id)
            CHECK(*l.params.alpha <= *r.params.alpha);
    }
}

TEST_CASE("x realization") {
    SweepConfig cfg = base_config();
    cfg.intervals = {{0.1, 0.7}};
    cfg.x_fractions = {0, 1.0 / 3, 1};
    const auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].params.x == 0.1);
    CHECK(rows[1].params.x == 0.1 + (1.0 / 3) * (0.7 - 0.1));
    CHECK(rows[2].params.x == 0.7);
}

TEST_CASE("per-point failures become error rows") {
    SweepConfig cfg = base_config();
    cfg.alphas = {0.8};
    cfg.functions = {parse_function_spec("mono:0.5"), parse_function_spec("mono:3")};
    const auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(is_error(rows[0]));
    CHECK(rows[0].notes.find("Gamma pole") != std::string::npos);
    CHECK(!is_error(rows[1]));
    CHECK(exit_code(rows) == 2);

    cfg = base_config();
    cfg.alphas = {0.05};
    cfg.inequalities = {IneqId::Identity, IneqId::Ghh};
    const auto ill = run_sweep(cfg);
    REQUIRE(ill.size() == 2);
    CHECK(!is_error(ill[0]));
    CHECK(is_error(ill[1]));
    CHECK(ill[1].notes.find("ill-conditioned") != std::string::npos);
}

TEST_CASE("consistency rows at alpha one half") {
    SweepConfig cfg = base_config();
    cfg.alphas = {0.5};
    cfg.x_fractions = {1};
    cfg.functions = {parse_function_spec("mono:1")};
    cfg.inequalities = {IneqId::Identity, IneqId::Byparts};
    const auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(std::fabs(rows[0].lhs - 0.64407468381000521) <= 1e-6);
    CHECK(std::fabs(rows[1].lhs - (M_PI / 2 - 1)) <= 1e-6);
    CHECK(!rows[0].holds);
    CHECK(!rows[1].holds);
    CHECK(exit_code(rows) == 1);
}

TEST_CASE("config strictness") {
    CHECK_THROWS_AS(parse_sweep_config(R"({"alphas": [1], "colour": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"alphas": "1"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"alphas": [0]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"intervals": [[1, 0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"pq_pairs": [[2, 3]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"x_fractions": [1.5]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"inequalities": ["thm9"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"functions": ["mono:-1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config(R"({"tolerances": {"slack": 1}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("[1, 2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("{"), std::invalid_argument);
    CHECK_THROWS_WITH(load_sweep_config("/nonexistent/config.json"),
                      doctest::Contains("/nonexistent/config.json"));
    try {
        parse_sweep_config(R"({"colour": 1})");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).starts_with("sweep config: "));
        CHECK(std::string(e.what()).find("colour") != std::string::npos);
    }
    const SweepConfig cfg = base_config();
    CHECK(cfg.seed == 7);
    CHECK(cfg.tolerances.slack_tol == 1e-9);
}
