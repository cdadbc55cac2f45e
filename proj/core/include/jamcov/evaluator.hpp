#pragma once

#include "jamcov/channel.hpp"
#include "jamcov/geometry.hpp"
#include "jamcov/secrecy.hpp"

namespace jamcov {

enum class DeltaKind { delta, delta_bar };

// Point evaluator for the jamming improvement over one fixed layout. The
// Bob-side link budget does not depend on the eavesdropper, so it is folded
// once at construction; per-point work is the Eve-side pathloss pair plus the
// two outage statistics.
class DeltaEvaluator {
public:
    DeltaEvaluator(const NodeLayout& layout, const TransmitPowers& powers,
                   const EnvConstants& env, double rate_rs, double exclusion_radius);

    double delta_at(Point2D eve) const;
    double delta_bar_at(Point2D eve) const;
    double value_at(Point2D eve, DeltaKind kind) const;

    // Both coefficient sets and the fading rates for one point; used where
    // the raw SOP (closed-form or empirical) is wanted rather than the ratio.
    struct PointChannel {
        SnrCoefficients no_jamming;
        SnrCoefficients jamming;
        SecrecyParams params;
    };
    PointChannel channel_at(Point2D eve) const;

    double omega_ab() const { return omega_ab_; }
    const NodeLayout& layout() const { return layout_; }

private:
    struct LogProbs {
        double no_jamming;
        double jamming;
    };
    LogProbs log_probs_at(Point2D eve) const;
    double eve_coefficient(Point2D eve) const;
    double omega_ae_at(Point2D eve) const;

    NodeLayout layout_;
    TransmitPowers powers_;
    EnvConstants env_;
    double rate_rs_;
    double exclusion_radius_;
    double omega_ab_;
    double bob_coefficient_;  // jamming-mode a, Eve-independent
    double growth_;           // 2^Rs
};

}  // namespace jamcov
