#include "jamcov/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "jamcov/errors.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

void PowerBudget::validate() const {
    if (!(gamma_t > 0.0)) throw ValidationError("power_budget.gamma_t must be positive");
    if (!(alice_share > 0.0 && alice_share <= 1.0)) {
        throw ValidationError("power_budget.alice_share must be in (0, 1]");
    }
    if (!(jammer_ratio >= 0.0 && jammer_ratio <= 1.0)) {
        throw ValidationError("power_budget.jammer_ratio must be in [0, 1]");
    }
}

TransmitPowers PowerBudget::resolve() const {
    validate();
    const double jam_total = (1.0 - alice_share) * gamma_t;
    TransmitPowers powers;
    powers.gamma_a = alice_share * gamma_t;
    powers.gamma_j1 = jam_total / (1.0 + jammer_ratio);
    powers.gamma_j2 = jam_total - powers.gamma_j1;
    return powers;
}

void Scenario::validate() const {
    if (!(d_ab > 0.0)) throw ValidationError("d_ab must be positive");
    if (!(rate_rs > 0.0)) throw ValidationError("rate_rs must be positive");
    env.validate();
    powers.validate();
    if (budget) {
        budget->validate();
        const TransmitPowers resolved = budget->resolve();
        const auto matches = [](double a, double b) {
            return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1.0});
        };
        if (!matches(resolved.gamma_a, powers.gamma_a) ||
            !matches(resolved.gamma_j1, powers.gamma_j1) ||
            !matches(resolved.gamma_j2, powers.gamma_j2)) {
            throw ValidationError("powers are inconsistent with the declared power_budget");
        }
    }
    if (!(jammers.r_j > 0.0)) throw ValidationError("jammers.r_j must be positive");
    if (!(jammers.z_j1 > 0.0) || !(jammers.z_j2 > 0.0)) {
        throw ValidationError("jammer heights must be positive");
    }
    if (!(jammers.theta_j1_deg >= 0.0 && jammers.theta_j1_deg <= 180.0) ||
        !(jammers.theta_j2_deg >= 0.0 && jammers.theta_j2_deg <= 180.0)) {
        throw ValidationError("jammer angles theta_j*_deg must lie in [0, 180]");
    }
    region.validate();
    mc.validate();
    if (!(sweeps.angle_step_deg > 0.0) || !(sweeps.theta_step_deg > 0.0) ||
        !(sweeps.validate_angle_step_deg > 0.0)) {
        throw ValidationError("sweep step sizes must be positive");
    }
    if (sweeps.heights.empty() || sweeps.ratios.empty() || sweeps.rj_values.empty() ||
        sweeps.validate_ring_fractions.empty()) {
        throw ValidationError("sweep axis lists must not be empty");
    }
    for (double h : sweeps.heights) {
        if (!(h > 0.0)) throw ValidationError("sweeps.heights must be positive");
    }
    for (double r : sweeps.ratios) {
        if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("sweeps.ratios must lie in [0, 1]");
    }
    for (double r : sweeps.rj_values) {
        if (!(r > 0.0)) throw ValidationError("sweeps.rj_values must be positive");
    }
    for (double f : sweeps.validate_ring_fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw ValidationError("sweeps.validate_ring_fractions must lie in (0, 1]");
        }
    }
    if (theta_study) {
        if (theta_study->d_ab_values.empty() || theta_study->r_j_values.empty()) {
            throw ValidationError("theta_study needs non-empty d_ab_values and r_j_values");
        }
        for (double d : theta_study->d_ab_values) {
            if (!(d > 0.0)) throw ValidationError("theta_study.d_ab_values must be positive");
        }
        for (double r : theta_study->r_j_values) {
            if (!(r > 0.0)) throw ValidationError("theta_study.r_j_values must be positive");
        }
    }
}

NodeLayout Scenario::layout() const {
    const JammerAngles angles{std::min(deg_to_rad(jammers.theta_j1_deg), kPi),
                              std::min(deg_to_rad(jammers.theta_j2_deg), kPi)};
    return place_nodes(d_ab, jammers.r_j, angles, jammers.z_j1, jammers.z_j2);
}

}  // namespace jamcov
