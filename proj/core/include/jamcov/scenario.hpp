#pragma once

#include <optional>
#include <vector>

#include "jamcov/channel.hpp"
#include "jamcov/geometry.hpp"
#include "jamcov/montecarlo.hpp"
#include "jamcov/region.hpp"

namespace jamcov {

// Jammer placement: orbit radius around Alice, the two half-angles measured
// from behind Alice, and the UAV heights. Angles are kept in degrees here so
// scenario files round-trip exactly; layout() converts.
struct JammerConfig {
    double r_j = 7.0;
    double theta_j1_deg = 0.0;
    double theta_j2_deg = 0.0;
    double z_j1 = 13.0;
    double z_j2 = 13.0;
};

// Total-budget power description: gamma_a = alice_share * gamma_t and the
// rest is split between the jammers so that min/max equals jammer_ratio
// (ratio 1 = even split, ratio 0 = everything on jammer 1).
struct PowerBudget {
    double gamma_t = 30.0;
    double alice_share = 0.5;
    double jammer_ratio = 1.0;

    void validate() const;
    TransmitPowers resolve() const;
};

// Sweep axes for the experiment commands. Everything has a documented
// default; scenario files override per study.
struct SweepConfig {
    std::vector<double> heights = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25};
    double angle_step_deg = 2.0;        // orbit/pair sweeps
    std::vector<double> ratios = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<double> rj_values = {7, 14, 21, 28};
    double theta_step_deg = 1.0;        // opening-angle optimization grid
    std::vector<double> validate_ring_fractions = {0.25, 0.5, 0.75};
    double validate_angle_step_deg = 10.0;
};

// Optional distance/orbit study grid for the opening-angle optimization.
struct ThetaStudy {
    std::vector<double> d_ab_values;
    std::vector<double> r_j_values;
};

// One full experiment description. A stable digest of the canonicalized
// fields (see scenario_io) identifies every artifact derived from it.
struct Scenario {
    double d_ab = 20.0;
    double rate_rs = 1.0;
    EnvConstants env{};
    TransmitPowers powers{};
    std::optional<PowerBudget> budget;  // when present, powers == budget.resolve()
    JammerConfig jammers{};
    RegionSpec region{};
    McConfig mc{};
    SweepConfig sweeps{};
    std::optional<ThetaStudy> theta_study;

    void validate() const;
    NodeLayout layout() const;
};

}  // namespace jamcov
