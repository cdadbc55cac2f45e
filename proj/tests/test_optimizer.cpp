#include <doctest.h>

#include <cmath>
#include <vector>

#include "jamcov/errors.hpp"
#include "jamcov/optimizer.hpp"
#include "jamcov/util.hpp"

using namespace jamcov;

namespace {

Scenario base_scenario() {
    Scenario s;
    s.d_ab = 20;
    s.powers = {15, 15, 15};
    s.jammers = {7.0, 30.0, 30.0, 13.0, 13.0};
    // Coarse region keeps the sweeps quick; resolution is not under test here.
    s.region.n_radial = 16;
    s.region.n_angular = 36;
    return s;
}

}  // namespace

TEST_CASE("f_theta is 3 under zero jamming power") {
    Scenario s = base_scenario();
    s.powers = {15, 0, 0};
    CHECK(f_theta(s, 0.0) == 3.0);
    CHECK(f_theta(s, kPi / 2) == 3.0);
    CHECK(f_theta(s, kPi) == 3.0);
}

TEST_CASE("f_theta rejects angles outside [0, pi]") {
    const Scenario s = base_scenario();
    CHECK_THROWS_AS(f_theta(s, -0.1), InvalidParameterError);
    CHECK_THROWS_AS(f_theta(s, kPi + 0.1), InvalidParameterError);
}

TEST_CASE("f_theta folds the mirrored side probes") {
    const Scenario s = base_scenario();
    for (double theta : {0.0, 0.7, 1.9, kPi}) {
        Scenario v = s;
        v.jammers.theta_j1_deg = rad_to_deg(theta / 2);
        v.jammers.theta_j2_deg = v.jammers.theta_j1_deg;
        const DeltaEvaluator ev(v.layout(), v.powers, v.env, v.rate_rs,
                                v.region.exclusion_radius);
        const double r = v.jammers.r_j;
        const double expected = 2.0 * ev.delta_bar_at({0, r}) + ev.delta_bar_at({-r, 0});
        CHECK(f_theta(s, theta) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("optimize_theta grid covers [0, pi] inclusive") {
    const Scenario s = base_scenario();
    const SweepResult sweep = optimize_theta(s, deg_to_rad(1.0), 2);
    REQUIRE(sweep.axis_values.size() == 181);
    CHECK(sweep.axis_values.front() == 0.0);
    CHECK(sweep.axis_values.back() == doctest::Approx(180.0).epsilon(1e-12));
}

TEST_CASE("flat objective ties break toward the smallest angle") {
    Scenario s = base_scenario();
    s.powers = {15, 0, 0};
    const SweepResult sweep = optimize_theta(s, deg_to_rad(15.0), 2);
    CHECK(sweep.argmax_value() == 0.0);
    CHECK(sweep.argmax_metric() == 3.0);
}

TEST_CASE("optimize_theta is deterministic across workers and repeats") {
    const Scenario s = base_scenario();
    const SweepResult a = optimize_theta(s, deg_to_rad(5.0), 1);
    const SweepResult b = optimize_theta(s, deg_to_rad(5.0), 3);
    CHECK(a.axis_values == b.axis_values);
    CHECK(a.metric_values == b.metric_values);
    CHECK(a.argmax_index == b.argmax_index);
}

TEST_CASE("exchange symmetry: swapping the jammer labels leaves WSC unchanged") {
    Scenario s = base_scenario();
    s.jammers.theta_j1_deg = 20;
    s.jammers.theta_j2_deg = 65;
    s.jammers.z_j1 = 9;
    s.jammers.z_j2 = 17;
    s.powers = {15, 4, 22};
    Scenario swapped = s;
    std::swap(swapped.jammers.theta_j1_deg, swapped.jammers.theta_j2_deg);
    std::swap(swapped.jammers.z_j1, swapped.jammers.z_j2);
    std::swap(swapped.powers.gamma_j1, swapped.powers.gamma_j2);
    const double lhs = scenario_wsc(s, DeltaKind::delta, 2);
    const double rhs = scenario_wsc(swapped, DeltaKind::delta, 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("sweep_power_ratio labels are interchangeable in symmetric geometry") {
    Scenario s = base_scenario();
    s.jammers = {28.0, 45.0, 45.0, 13.0, 13.0};
    PowerBudget budget{30.0, 0.5, 1.0};
    s.budget = budget;
    s.powers = budget.resolve();
    const std::vector<double> ratios = {0.0, 0.25, 1.0};
    const SweepResult sweep = sweep_power_ratio(s, budget, ratios, DeltaKind::delta, 2);
    REQUIRE(sweep.axis_values.size() == 3);

    // Ratio 0 puts everything on jammer 1; hand the budget to jammer 2
    // instead and the WSC must agree.
    Scenario flipped = s;
    flipped.budget.reset();
    flipped.powers = {15.0, 0.0, 15.0};
    CHECK(scenario_wsc(flipped, DeltaKind::delta, 2) ==
          doctest::Approx(sweep.metric_values[0]).epsilon(1e-12));
}

TEST_CASE("sweep_height groups rows by height with a global argmax") {
    const Scenario s = base_scenario();
    const std::vector<double> heights = {9.0, 13.2};
    const std::vector<double> angles = {90.0, 180.0, 270.0};
    const SweepResult sweep = sweep_height(s, heights, angles, DeltaKind::delta, 2);
    REQUIRE(sweep.axis_values.size() == 6);
    REQUIRE(sweep.extra_columns.size() == 1);
    CHECK(sweep.extra_columns[0].first == "z_j");
    CHECK(sweep.extra_columns[0].second[0] == 9.0);
    CHECK(sweep.extra_columns[0].second[5] == 13.2);
    CHECK(sweep.axis_values[1] == 180.0);
    // Orbit positions at 90 and 270 degrees mirror each other.
    CHECK(sweep.metric_values[0] == doctest::Approx(sweep.metric_values[2]).epsilon(1e-12));
    CHECK(sweep.argmax_metric() == sweep.metric_values[4]);
    CHECK(sweep.axis_values.at(sweep.argmax_index) == 180.0);
}

TEST_CASE("sweep_angle_pairs collapses for a degenerate orbit") {
    Scenario s = base_scenario();
    s.region.exclusion_radius = 0.5;
    const std::vector<double> rj = {1e-7};
    const SweepResult sweep = sweep_angle_pairs(s, rj, kPi / 4, DeltaKind::delta, 2);
    REQUIRE(sweep.axis_values.size() == 1);
    // All pairs coincide, so the scan keeps the first grid point.
    CHECK(sweep.extra_columns[0].second[0] == 0.0);
    CHECK(sweep.extra_columns[1].second[0] == 0.0);
}

TEST_CASE("sweep_angle_pairs reports the maximizing pair per orbit radius") {
    Scenario s = base_scenario();
    const std::vector<double> rj = {7.0, 14.0};
    const SweepResult sweep = sweep_angle_pairs(s, rj, deg_to_rad(30.0), DeltaKind::delta, 2);
    REQUIRE(sweep.axis_values.size() == 2);
    CHECK(sweep.axis_values[0] == 7.0);
    CHECK(sweep.axis_values[1] == 14.0);
    for (std::size_t r = 0; r < 2; ++r) {
        // The reported WSC must match a direct evaluation of the reported pair.
        Scenario check = s;
        check.jammers.r_j = rj[r];
        check.jammers.theta_j1_deg = sweep.extra_columns[0].second[r];
        check.jammers.theta_j2_deg = sweep.extra_columns[1].second[r];
        CHECK(scenario_wsc(check, DeltaKind::delta, 2) ==
              doctest::Approx(sweep.metric_values[r]).epsilon(1e-9));
    }
}

TEST_CASE("theta_wsc_curve shares the grid with optimize_theta") {
    const Scenario s = base_scenario();
    const SweepResult f = optimize_theta(s, deg_to_rad(30.0), 2);
    const SweepResult w = theta_wsc_curve(s, deg_to_rad(30.0), DeltaKind::delta_bar, 2);
    CHECK(f.axis_values == w.axis_values);
    for (double v : w.metric_values) {
        CHECK(v >= 0.0);
    }
}

TEST_CASE("sweep argument validation") {
    const Scenario s = base_scenario();
    CHECK_THROWS_AS(optimize_theta(s, 0.0, 1), InvalidParameterError);
    CHECK_THROWS_AS(sweep_angle_pairs(s, {}, 0.1, DeltaKind::delta, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(sweep_height(s, {}, std::vector<double>{180.0}, DeltaKind::delta, 1),
                    InvalidParameterError);
    const PowerBudget budget{30.0, 0.5, 1.0};
    CHECK_THROWS_AS(sweep_power_ratio(s, budget, {}, DeltaKind::delta, 1),
                    InvalidParameterError);
}
