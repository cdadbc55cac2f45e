#include "jamcov/evaluator.hpp"

#include <cmath>

#include "jamcov/errors.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

DeltaEvaluator::DeltaEvaluator(const NodeLayout& layout, const TransmitPowers& powers,
                               const EnvConstants& env, double rate_rs,
                               double exclusion_radius)
    : layout_(layout),
      powers_(powers),
      env_(env),
      rate_rs_(rate_rs),
      exclusion_radius_(exclusion_radius) {
    env_.validate();
    powers_.validate();
    if (!(rate_rs > 0.0)) {
        throw ValidationError("rate_rs must be positive");
    }
    if (!(exclusion_radius >= 0.0)) {
        throw ValidationError("exclusion radius must be >= 0");
    }
    omega_ab_ = ground_fading_rate(horizontal_distance(layout_.alice, layout_.bob), env_.alpha);
    bob_coefficient_ = snr_coefficients(layout_, layout_.bob, powers_, env_, JammingMode::jamming).a;
    growth_ = std::exp2(rate_rs_);
}

double DeltaEvaluator::omega_ae_at(Point2D eve) const {
    const double d_ae = horizontal_distance(layout_.alice, eve);
    if (d_ae < exclusion_radius_ || !(d_ae > 0.0)) {
        throw DegenerateGeometryError("eavesdropper point at distance " + format_double(d_ae) +
                                      " is inside the exclusion radius " +
                                      format_double(exclusion_radius_));
    }
    return std::pow(d_ae, env_.alpha);
}

double DeltaEvaluator::eve_coefficient(Point2D eve) const {
    const double l1 =
        a2g_pathloss(layout_.z_j1, horizontal_distance(eve, layout_.jammer1_ground), env_);
    const double l2 =
        a2g_pathloss(layout_.z_j2, horizontal_distance(eve, layout_.jammer2_ground), env_);
    // Same term grouping as snr_coefficients, so values agree bit for bit.
    return powers_.gamma_a / (1.0 + (powers_.gamma_j1 / l1 + powers_.gamma_j2 / l2));
}

DeltaEvaluator::PointChannel DeltaEvaluator::channel_at(Point2D eve) const {
    PointChannel point;
    point.no_jamming = {powers_.gamma_a, powers_.gamma_a, JammingMode::no_jamming};
    point.jamming = {bob_coefficient_, eve_coefficient(eve), JammingMode::jamming};
    point.params = {rate_rs_, omega_ab_, omega_ae_at(eve)};
    return point;
}

double DeltaEvaluator::delta_at(Point2D eve) const {
    const PointChannel point = channel_at(eve);
    return delta(point.no_jamming, point.jamming, point.params);
}

double DeltaEvaluator::delta_bar_at(Point2D eve) const {
    const PointChannel point = channel_at(eve);
    return delta_bar(point.no_jamming, point.jamming, point.params);
}

double DeltaEvaluator::value_at(Point2D eve, DeltaKind kind) const {
    return kind == DeltaKind::delta ? delta_at(eve) : delta_bar_at(eve);
}

}  // namespace jamcov
