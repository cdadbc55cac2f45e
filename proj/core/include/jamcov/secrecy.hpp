#pragma once

#include "jamcov/channel.hpp"

namespace jamcov {

// Target secrecy rate plus the two ground fading rates the outage statistics
// depend on.
struct SecrecyParams {
    double rate_rs = 1.0;   // bits/s/Hz, must be > 0
    double omega_ab = 1.0;  // Exp rate of |h_AB|^2
    double omega_ae = 1.0;  // Exp rate of |h_AE|^2

    void validate() const;
};

// max(0, log2((1 + gamma_b) / (1 + gamma_e))).
double secrecy_capacity(double gamma_b, double gamma_e);

// log(1 - SOP) for the closed form below, evaluated without forming the
// probability itself:
//   -(omega_ab/a)*(2^Rs - 1) - log1p(2^Rs * (omega_ab/omega_ae) * (b/a))
// Always <= 0. This is the shared primitive behind sop_closed_form, delta
// and delta_bar; keeping them on one code path makes the three mutually
// consistent even where the probabilities saturate. Inputs are assumed
// validated by the callers.
double log_secrecy_probability(const SnrCoefficients& coeffs, const SecrecyParams& params);

// Secrecy outage probability, in [0, 1). Monotone increasing in the target
// rate and in the eavesdropper coefficient b.
double sop_closed_form(const SnrCoefficients& coeffs, const SecrecyParams& params);

// Jamming improvement: SOP without jamming over SOP with jamming. Values
// above 1 mean the jammers help at this eavesdropper position.
double delta(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming,
             const SecrecyParams& params);

// Ratio of secrecy-achieving probabilities (1 - SOP_J)/(1 - SOP_NJ). Crosses
// 1 exactly where delta does, and is cheaper to evaluate and better behaved
// as a smooth optimization surrogate.
double delta_bar(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming,
                 const SecrecyParams& params);

}  // namespace jamcov
