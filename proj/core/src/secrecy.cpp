#include "jamcov/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jamcov/errors.hpp"

namespace jamcov {

namespace {

// Largest double below 1: the representable stand-in for "strictly < 1".
const double kSopCeiling = std::nextafter(1.0, 0.0);

double sop_from_log_probability(double log_secrecy_prob) {
    const double sop = -std::expm1(log_secrecy_prob);
    return std::clamp(sop, 0.0, kSopCeiling);
}

void check_modes(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming) {
    if (no_jamming.mode != JammingMode::no_jamming) {
        throw InvalidParameterError("delta: first coefficient set must be the no-jamming one");
    }
    if (jamming.mode != JammingMode::jamming) {
        throw InvalidParameterError("delta: second coefficient set must be the jamming one");
    }
}

}  // namespace

void SecrecyParams::validate() const {
    if (!(rate_rs > 0.0)) throw ValidationError("rate_rs must be positive");
    if (!(omega_ab > 0.0)) throw ValidationError("omega_ab must be positive");
    if (!(omega_ae > 0.0)) throw ValidationError("omega_ae must be positive");
}

double secrecy_capacity(double gamma_b, double gamma_e) {
    return std::max(0.0, std::log2((1.0 + gamma_b) / (1.0 + gamma_e)));
}

double log_secrecy_probability(const SnrCoefficients& coeffs, const SecrecyParams& params) {
    const double growth = std::exp2(params.rate_rs);
    return -(params.omega_ab / coeffs.a) * (growth - 1.0) -
           std::log1p(growth * (params.omega_ab / params.omega_ae) * (coeffs.b / coeffs.a));
}

double sop_closed_form(const SnrCoefficients& coeffs, const SecrecyParams& params) {
    params.validate();
    return sop_from_log_probability(log_secrecy_probability(coeffs, params));
}

double delta(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming,
             const SecrecyParams& params) {
    params.validate();
    check_modes(no_jamming, jamming);
    const double sop_nj = sop_from_log_probability(log_secrecy_probability(no_jamming, params));
    const double sop_j = sop_from_log_probability(log_secrecy_probability(jamming, params));
    if (!(sop_j > 0.0)) {
        throw DivisionGuardError("delta: jamming SOP is zero; only possible in the Rs -> 0 limit");
    }
    return sop_nj / sop_j;
}

double delta_bar(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming,
                 const SecrecyParams& params) {
    params.validate();
    check_modes(no_jamming, jamming);
    return std::exp(log_secrecy_probability(jamming, params) -
                    log_secrecy_probability(no_jamming, params));
}

}  // namespace jamcov
