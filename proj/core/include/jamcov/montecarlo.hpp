#pragma once

#include <cstdint>
#include <random>

#include "jamcov/secrecy.hpp"

namespace jamcov {

// Stochastic estimator configuration. The estimate is a pure function of
// (seed, n_substreams, n_samples): workers pick up whole substreams and the
// merge is an exact integer sum, so the worker count never changes a result.
struct McConfig {
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 1;
    std::uint32_t n_substreams = 64;
    unsigned workers = 0;  // 0 = hardware default; affects speed only

    void validate() const;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

// One substream of the seeded generator family. Substream identities are
// global (seed, stream_id) pairs, so any worker reproduces the same draws.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint64_t stream_id);

    // Uniform on [0, 1) with 53 random bits.
    double next();

private:
    std::mt19937_64 rng_;
};

// Inverse-CDF transform: -log1p(-u) / rate. Exposed separately so the
// mapping can be checked at fixed points without a generator.
double exponential_from_uniform(double u, double rate);

// Draw of the channel gain |h|^2 ~ Exp(rate).
double sample_channel_gain(double rate, UniformStream& stream);

// Empirical SOP: counts secrecy_capacity(a*|h_AB|^2, b*|h_AE|^2) < Rs over
// n_samples paired draws; the returned std_error is the binomial
// sqrt(p*(1-p)/n). stream_salt partitions the substream space so that two
// estimates inside one experiment never share draws.
McEstimate empirical_sop(const SnrCoefficients& coeffs, const SecrecyParams& params,
                         const McConfig& mc, std::uint64_t stream_salt = 0);

// Empirical jamming improvement: ratio of two independent empirical SOPs
// (disjoint substreams), std_error by first-order propagation of the ratio.
McEstimate empirical_delta(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming,
                           const SecrecyParams& params, const McConfig& mc);

}  // namespace jamcov
