#pragma once

#include "jamcov/geometry.hpp"

namespace jamcov {

// Environmental and link constants. Defaults are the Urban parameter set:
// psi = 9.61, omega = 0.16, alpha = alpha_j = 0.3, eta_nlos = 20, eta_los = 1.
// alpha/alpha_j are unusually small for pathloss exponents but are kept
// verbatim; do not "fix" them here, override them in the scenario instead.
struct EnvConstants {
    double psi = 9.61;       // LoS S-curve offset, degrees
    double omega = 0.16;     // LoS S-curve slope, 1/degree
    double alpha = 0.3;      // ground pathloss exponent
    double alpha_j = 0.3;    // air-to-ground pathloss exponent
    double eta_los = 1.0;    // LoS attenuation factor
    double eta_nlos = 20.0;  // NLoS attenuation factor

    void validate() const;
};

// Transmit SNRs as linear ratios (P/sigma^2), not dB. A scenario file may
// declare dB values; those are converted at the load boundary, never here.
struct TransmitPowers {
    double gamma_a = 15.0;
    double gamma_j1 = 15.0;
    double gamma_j2 = 15.0;

    void validate() const;
};

enum class JammingMode { no_jamming, jamming };

// Received-SNR multipliers: gamma_B = a*|h_AB|^2, gamma_E = b*|h_AE|^2.
struct SnrCoefficients {
    double a = 0.0;
    double b = 0.0;
    JammingMode mode = JammingMode::no_jamming;
};

// Probability of a line-of-sight connection for a UAV at height z whose
// ground projection is at horizontal distance r from the ground node:
//   1 / (1 + psi*exp(-omega*[(180/pi)*atan2(z, r) - psi]))
// Strictly inside (0, 1); the two-argument arctangent keeps r = 0 exact.
double los_probability(double z, double r, const EnvConstants& env);

// Average air-to-ground pathloss:
//   (z^2 + r^2)^(alpha_j/2) * (P_LoS*eta_los + (1 - P_LoS)*eta_nlos)
double a2g_pathloss(double z, double r, const EnvConstants& env);

// Rate of the exponential ground channel gain |h|^2 at distance d: d^alpha.
// The gain's mean is d^-alpha. Throws for d <= 0 (degenerate link).
double ground_fading_rate(double d, double alpha);

// Assembles (a, b) for one eavesdropper position. Jamming mode:
//   a = gamma_a / (1 + gamma_j1/L_j1b + gamma_j2/L_j2b)
//   b = gamma_a / (1 + gamma_j1/L_j1e + gamma_j2/L_j2e)
// with L the a2g pathloss at each jammer's height and horizontal offset.
// No-jamming mode returns (gamma_a, gamma_a).
SnrCoefficients snr_coefficients(const NodeLayout& layout, Point2D eve,
                                 const TransmitPowers& powers, const EnvConstants& env,
                                 JammingMode mode);

}  // namespace jamcov
