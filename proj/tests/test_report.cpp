#include <doctest.h>

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hartogs/report.hpp"

using hartogs::Rational;
using hartogs::RunConfig;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("run produces one entry per (m, s) in order") {
    RunConfig config;
    config.spec_source = "polydisc:1";
    config.m_values = {1, 2};
    config.s_values = {Rational(1, 2), Rational(1, 4)};
    const auto report = hartogs::run(config);
    REQUIRE(report.entries.size() == 4);
    CHECK(report.entries[0].m == 1);
    CHECK(report.entries[0].s == Rational(1, 2));
    CHECK(report.entries[1].m == 1);
    CHECK(report.entries[1].s == Rational(1, 4));
    CHECK(report.entries[2].m == 2);
    CHECK(report.entries[3].m == 2);

    CHECK(report.entries[0].verdict.is_einstein);
    CHECK(*report.entries[0].verdict.c6 == Rational(9, 4));
    CHECK_FALSE(report.entries[1].verdict.is_einstein);
    CHECK_FALSE(report.entries[0].lab_summary.has_value());
}

TEST_CASE("run validates its config") {
    RunConfig config;
    config.spec_source = "polydisc:1";
    CHECK_THROWS_WITH_AS(hartogs::run(config),
                         "config: at least one m and one s value are required",
                         std::invalid_argument);

    config.m_values = {1};
    config.s_values = {Rational(-3, 4)};
    CHECK_THROWS_AS(hartogs::run(config), std::invalid_argument);

    config.s_values = {Rational(1, 2)};
    config.spec_source = "nosuchfile.json";
    CHECK_THROWS_AS(hartogs::run(config), std::invalid_argument);
}

TEST_CASE("text rendering is deterministic and complete") {
    RunConfig config;
    config.spec_source = "polydisc:1";
    config.m_values = {1};
    config.s_values = {Rational(1, 2), Rational(1, 4)};
    const auto report = hartogs::run(config);
    const std::string text = hartogs::render_text(report);
    CHECK(text == hartogs::render_text(report));

    CHECK(contains(text, "domain: polydisc:1"));
    CHECK(contains(text, "F_Omega(sigma) = 2*sigma + 1"));
    CHECK(contains(text, "einstein: yes, C6 = 9/4"));
    CHECK(contains(text, "classification: Ball"));
    CHECK(contains(text, "s recovered: 1/2"));
    CHECK(contains(text, "einstein: no"));
    CHECK(contains(text, "witness(y) ="));
    CHECK(contains(text, "classification: NotEinstein"));
    CHECK_FALSE(contains(text, "lab ("));
}

TEST_CASE("json rendering round trips through a parser") {
    RunConfig config;
    config.spec_source = "ball:2";
    config.m_values = {1};
    config.s_values = {Rational(1, 3), Rational(1, 5)};
    const auto report = hartogs::run(config);
    const auto j = nlohmann::json::parse(hartogs::render_json(report));

    CHECK(j["domain"]["label"] == "ball:2");
    CHECK(j["domain"]["n"] == 2);
    CHECK(j["domain"]["rank"] == 1);
    CHECK(j["domain"]["c_omega"] == "1/3");
    REQUIRE(j["entries"].size() == 2);

    const auto& ball = j["entries"][0];
    CHECK(ball["s"] == "1/3");
    CHECK(ball["einstein"] == true);
    CHECK(ball["C6"] == "64/27");
    CHECK(ball["classification"] == "Ball");
    CHECK(ball["ball_dim"] == 3);
    CHECK(ball["s_recovered"] == "1/3");

    const auto& off = j["entries"][1];
    CHECK(off["einstein"] == false);
    CHECK(off["classification"] == "NotEinstein");
    CHECK(off.contains("witness"));
    CHECK_FALSE(off.contains("C6"));
}

TEST_CASE("sweep csv rows") {
    RunConfig config;
    config.spec_source = "ball:2";
    config.m_values = {1};
    config.s_values = {Rational(1, 3), Rational(0), Rational(1, 5)};
    const auto report = hartogs::run(config);
    const std::string csv = hartogs::sweep_csv(report);
    CHECK(contains(csv, "spec,m,s,kind,is_einstein,c6,ball_dim,s_recovered\n"));
    CHECK(contains(csv, "ball:2,1,1/3,Ball,true,64/27,3,1/3\n"));
    CHECK(contains(csv, "ball:2,1,0,ProductCase,true,2,,\n"));
    CHECK(contains(csv, "ball:2,1,1/5,NotEinstein,false,,,\n"));
}

TEST_CASE("lab summary appears when requested") {
    RunConfig config;
    config.spec_source = "polydisc:1";
    config.m_values = {1};
    config.s_values = {Rational(1, 2)};
    config.lab = true;
    const auto report = hartogs::run(config);
    REQUIRE(report.entries[0].lab_summary.has_value());

    const std::string text = hartogs::render_text(report);
    CHECK(contains(text, "lab (base polydisc:1, density 1"));
    CHECK(contains(text, "kernel series max rel"));

    const auto j = nlohmann::json::parse(hartogs::render_json(report));
    CHECK(j["entries"][0]["lab"]["hermitian_dev"] == 0.0);
}

TEST_CASE("parse_s_grid") {
    const auto grid = hartogs::parse_s_grid("0:1:1/4");
    REQUIRE(grid.size() == 5);
    CHECK(grid[0] == Rational(0));
    CHECK(grid[1] == Rational(1, 4));
    CHECK(grid[4] == Rational(1));

    // inclusive endpoint only when the step lands on it
    const auto uneven = hartogs::parse_s_grid("0:1/2:1/3");
    REQUIRE(uneven.size() == 2);
    CHECK(uneven[1] == Rational(1, 3));

    const auto single = hartogs::parse_s_grid("1/2:1/2:1");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Rational(1, 2));

    // negative start is allowed; only the step must be positive
    const auto neg = hartogs::parse_s_grid("-1/4:1/4:1/4");
    CHECK(neg.size() == 3);

    CHECK_THROWS_AS(hartogs::parse_s_grid("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(hartogs::parse_s_grid("0:1:1/4:9"), std::invalid_argument);
    CHECK_THROWS_AS(hartogs::parse_s_grid("a:b:c"), std::invalid_argument);
    CHECK_THROWS_AS(hartogs::parse_s_grid("0:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(hartogs::parse_s_grid("0:1:-1/4"), std::invalid_argument);
    CHECK_THROWS_AS(hartogs::parse_s_grid("1:0:1/2"), std::invalid_argument);
}
