#include <doctest.h>

#include <cmath>

#include "jamcov/errors.hpp"
#include "jamcov/scenario_io.hpp"

using namespace jamcov;

TEST_CASE("minimal scenario takes the documented defaults") {
    const Scenario s = parse_scenario(R"({"d_ab": 20})");
    CHECK(s.d_ab == 20.0);
    CHECK(s.rate_rs == 1.0);
    CHECK(s.env.psi == 9.61);
    CHECK(s.env.omega == 0.16);
    CHECK(s.env.alpha == 0.3);
    CHECK(s.env.alpha_j == 0.3);
    CHECK(s.env.eta_nlos == 20.0);
    CHECK(s.env.eta_los == 1.0);
    CHECK(s.powers.gamma_a == 15.0);
    CHECK(s.powers.gamma_j1 == 15.0);
    CHECK(s.powers.gamma_j2 == 15.0);
    CHECK(s.region.radius_s == 40.0);
    CHECK(s.region.exclusion_radius == 0.5);
    CHECK(s.mc.n_samples == 1'000'000);
    CHECK_FALSE(s.budget.has_value());
    CHECK_FALSE(s.theta_study.has_value());
}

TEST_CASE("comments are allowed in scenario files") {
    const Scenario s = parse_scenario("// header\n{\"d_ab\": 5 /* inline */}\n");
    CHECK(s.d_ab == 5.0);
}

TEST_CASE("unknown keys are rejected at every level") {
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "dab": 5})"), UnknownKeyError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "env": {"psii": 9.61}})"), UnknownKeyError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "jammers": {"rj": 7}})"), UnknownKeyError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "mc": {"samples": 100}})"), UnknownKeyError);
}

TEST_CASE("invariant violations name the offending field") {
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"d_ab": 20, "env": {"eta_los": 5, "eta_nlos": 2}})"),
                         "env.eta_nlos must be >= env.eta_los", ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": -1})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "rate_rs": 0})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "jammers": {"theta_j1_deg": 181}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "mc": {"n_samples": 10}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "region": {"n_radial": 2}})"),
                    ValidationError);
}

TEST_CASE("missing or malformed input") {
    CHECK_THROWS_AS(parse_scenario(R"({"rate_rs": 1})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario("{"), ParseError);
    CHECK_THROWS_AS(parse_scenario("[]"), ValidationError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), IoError);
}

TEST_CASE("dB declarations convert at the boundary") {
    const Scenario s = parse_scenario(
        R"({"d_ab": 20, "snr_unit": "db", "powers": {"gamma_a": 10, "gamma_j1": 0, "gamma_j2": 3}})");
    CHECK(s.powers.gamma_a == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(s.powers.gamma_j1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.powers.gamma_j2 == doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-15));
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "snr_unit": "watts"})"), ValidationError);
}

TEST_CASE("power budget resolves the jammer split") {
    const Scenario s = parse_scenario(
        R"({"d_ab": 20, "power_budget": {"gamma_t": 30, "alice_share": 0.5, "jammer_ratio": 1}})");
    REQUIRE(s.budget.has_value());
    CHECK(s.powers.gamma_a == 15.0);
    CHECK(s.powers.gamma_j1 == 7.5);
    CHECK(s.powers.gamma_j2 == 7.5);

    const Scenario lopsided = parse_scenario(
        R"({"d_ab": 20, "power_budget": {"gamma_t": 30, "alice_share": 0.5, "jammer_ratio": 0}})");
    CHECK(lopsided.powers.gamma_j1 == 15.0);
    CHECK(lopsided.powers.gamma_j2 == 0.0);

    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20,
        "powers": {"gamma_a": 15},
        "power_budget": {"gamma_t": 30}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(R"({"d_ab": 20, "power_budget": {"alice_share": 0.5}})"),
                    ValidationError);
}

TEST_CASE("scenario validate cross-checks budget against powers") {
    Scenario s = parse_scenario(R"({"d_ab": 20, "power_budget": {"gamma_t": 30}})");
    s.powers.gamma_j1 += 1.0;
    CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("canonical dump round-trips to the same hash") {
    const std::string text = R"({
        "d_ab": 17.25,
        "rate_rs": 0.75,
        "env": {"psi": 9.61, "alpha": 0.31},
        "powers": {"gamma_a": 12.5, "gamma_j1": 3.25, "gamma_j2": 0.125},
        "jammers": {"r_j": 11, "theta_j1_deg": 33.5, "theta_j2_deg": 60, "z_j1": 9.5, "z_j2": 14},
        "region": {"radius_s": 35, "n_radial": 48, "n_angular": 96},
        "mc": {"n_samples": 250000, "seed": 99, "n_substreams": 16},
        "theta_study": {"d_ab_values": [5, 10], "r_j_values": [7]}
    })";
    const Scenario first = parse_scenario(text);
    const std::string dump = canonical_json(first);
    const Scenario second = parse_scenario(dump);
    CHECK(scenario_hash(first) == scenario_hash(second));
    CHECK(canonical_json(second) == dump);
    CHECK(scenario_hash_hex(first).size() == 16);
}

TEST_CASE("hash is sensitive to every section") {
    const Scenario base = parse_scenario(R"({"d_ab": 20})");
    auto variant = [](const std::string& text) { return scenario_hash(parse_scenario(text)); };
    const std::uint64_t base_hash = scenario_hash(base);
    CHECK(variant(R"({"d_ab": 21})") != base_hash);
    CHECK(variant(R"({"d_ab": 20, "rate_rs": 2})") != base_hash);
    CHECK(variant(R"({"d_ab": 20, "mc": {"seed": 2}})") != base_hash);
    CHECK(variant(R"({"d_ab": 20, "region": {"n_radial": 32}})") != base_hash);
    CHECK(variant(R"({"d_ab": 20, "sweeps": {"theta_step_deg": 2}})") != base_hash);
}

TEST_CASE("layout converts the configured degrees") {
    const Scenario s = parse_scenario(
        R"({"d_ab": 20, "jammers": {"r_j": 14, "theta_j1_deg": 60, "theta_j2_deg": 60}})");
    const NodeLayout layout = s.layout();
    CHECK(layout.jammer1_ground.x == doctest::Approx(-7.0).epsilon(1e-14));
    CHECK(layout.jammer1_ground.y == doctest::Approx(-12.124355652982141).epsilon(1e-14));
    // 180 degrees maps inside the geometric domain even after conversion.
    const Scenario wide = parse_scenario(
        R"({"d_ab": 20, "jammers": {"theta_j1_deg": 180, "theta_j2_deg": 180}})");
    CHECK_NOTHROW(wide.layout());
}
