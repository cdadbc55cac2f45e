#include "jamcov/channel.hpp"

#include <cmath>
#include <string>

#include "jamcov/errors.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

void EnvConstants::validate() const {
    if (!(psi > 0.0)) throw ValidationError("env.psi must be positive");
    if (!(omega > 0.0)) throw ValidationError("env.omega must be positive");
    if (!(alpha > 0.0)) throw ValidationError("env.alpha must be positive");
    if (!(alpha_j > 0.0)) throw ValidationError("env.alpha_j must be positive");
    if (!(eta_los >= 1.0)) throw ValidationError("env.eta_los must be >= 1");
    if (!(eta_nlos >= eta_los)) throw ValidationError("env.eta_nlos must be >= env.eta_los");
}

void TransmitPowers::validate() const {
    if (!(gamma_a > 0.0)) throw ValidationError("powers.gamma_a must be positive");
    if (!(gamma_j1 >= 0.0)) throw ValidationError("powers.gamma_j1 must be >= 0");
    if (!(gamma_j2 >= 0.0)) throw ValidationError("powers.gamma_j2 must be >= 0");
}

double los_probability(double z, double r, const EnvConstants& env) {
    if (!(z > 0.0)) {
        throw InvalidParameterError("los_probability: height must be positive, got " +
                                    format_double(z));
    }
    if (!(r >= 0.0)) {
        throw InvalidParameterError("los_probability: horizontal distance must be >= 0");
    }
    const double elevation_deg = (180.0 / kPi) * std::atan2(z, r);
    return 1.0 / (1.0 + env.psi * std::exp(-env.omega * (elevation_deg - env.psi)));
}

double a2g_pathloss(double z, double r, const EnvConstants& env) {
    const double p_los = los_probability(z, r, env);
    const double p_nlos = 1.0 - p_los;
    return std::pow(z * z + r * r, env.alpha_j / 2.0) *
           (p_los * env.eta_los + p_nlos * env.eta_nlos);
}

double ground_fading_rate(double d, double alpha) {
    if (!(d > 0.0)) {
        throw DegenerateGeometryError(
            "ground_fading_rate: zero-distance link has an infinite-mean gain (d = " +
            format_double(d) + ")");
    }
    return std::pow(d, alpha);
}

SnrCoefficients snr_coefficients(const NodeLayout& layout, Point2D eve,
                                 const TransmitPowers& powers, const EnvConstants& env,
                                 JammingMode mode) {
    if (mode == JammingMode::no_jamming) {
        return {powers.gamma_a, powers.gamma_a, mode};
    }

    // Grouping the jamming terms before adding 1 keeps the result invariant
    // under a bit-exact jammer swap or mirror reflection.
    const auto degraded = [&](Point2D node) {
        const double l1 = a2g_pathloss(layout.z_j1, horizontal_distance(node, layout.jammer1_ground), env);
        const double l2 = a2g_pathloss(layout.z_j2, horizontal_distance(node, layout.jammer2_ground), env);
        return powers.gamma_a / (1.0 + (powers.gamma_j1 / l1 + powers.gamma_j2 / l2));
    };

    return {degraded(layout.bob), degraded(eve), mode};
}

}  // namespace jamcov
