#include "jamcov/montecarlo.hpp"

#include <cmath>
#include <vector>

#include "jamcov/errors.hpp"
#include "jamcov/parallel.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Disjoint substream salts for the two sides of an empirical ratio.
constexpr std::uint64_t kNoJammingSalt = 1;
constexpr std::uint64_t kJammingSalt = 2;

}  // namespace

void McConfig::validate() const {
    if (n_samples < 1000) {
        throw ValidationError("mc.n_samples must be at least 1000");
    }
    if (n_substreams == 0) {
        throw ValidationError("mc.n_substreams must be at least 1");
    }
}

UniformStream::UniformStream(std::uint64_t seed, std::uint64_t stream_id)
    : rng_(splitmix64(seed ^ splitmix64(stream_id))) {}

double UniformStream::next() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double exponential_from_uniform(double u, double rate) {
    if (!(rate > 0.0)) {
        throw InvalidParameterError("exponential draw needs a positive rate, got " +
                                    format_double(rate));
    }
    return -std::log1p(-u) / rate;
}

double sample_channel_gain(double rate, UniformStream& stream) {
    return exponential_from_uniform(stream.next(), rate);
}

McEstimate empirical_sop(const SnrCoefficients& coeffs, const SecrecyParams& params,
                         const McConfig& mc, std::uint64_t stream_salt) {
    params.validate();
    mc.validate();
    if (!(coeffs.a > 0.0) || !(coeffs.b > 0.0)) {
        throw InvalidParameterError("empirical_sop: SNR coefficients must be positive");
    }

    const std::uint64_t substreams = mc.n_substreams;
    const std::uint64_t base = mc.n_samples / substreams;
    const std::uint64_t remainder = mc.n_samples % substreams;

    std::vector<std::uint64_t> outage_counts(substreams, 0);
    parallel_for(substreams, mc.workers, [&](std::size_t s) {
        // The legitimate gain is drawn first in every pair; the substream
        // partition is fixed by n_substreams alone.
        UniformStream stream(mc.seed, stream_salt * substreams + s);
        const std::uint64_t draws = base + (s < remainder ? 1 : 0);
        std::uint64_t outages = 0;
        for (std::uint64_t i = 0; i < draws; ++i) {
            const double gain_ab = sample_channel_gain(params.omega_ab, stream);
            const double gain_ae = sample_channel_gain(params.omega_ae, stream);
            const double capacity = secrecy_capacity(coeffs.a * gain_ab, coeffs.b * gain_ae);
            if (capacity < params.rate_rs) {
                ++outages;
            }
        }
        outage_counts[s] = outages;
    });

    std::uint64_t total = 0;
    for (std::uint64_t c : outage_counts) {
        total += c;
    }

    McEstimate estimate;
    estimate.n = mc.n_samples;
    estimate.value = static_cast<double>(total) / static_cast<double>(mc.n_samples);
    estimate.std_error = std::sqrt(estimate.value * (1.0 - estimate.value) /
                                   static_cast<double>(mc.n_samples));
    return estimate;
}

McEstimate empirical_delta(const SnrCoefficients& no_jamming, const SnrCoefficients& jamming,
                           const SecrecyParams& params, const McConfig& mc) {
    const McEstimate sop_nj = empirical_sop(no_jamming, params, mc, kNoJammingSalt);
    const McEstimate sop_j = empirical_sop(jamming, params, mc, kJammingSalt);
    if (!(sop_j.value > 0.0)) {
        throw InsufficientSamplesError(
            "empirical_delta: no outage events in the jamming stream; raise n_samples");
    }

    McEstimate estimate;
    estimate.n = mc.n_samples;
    estimate.value = sop_nj.value / sop_j.value;
    // First-order variance of the ratio X/Y: Var[X]/Y^2 + X^2 Var[Y]/Y^4.
    const double y2 = sop_j.value * sop_j.value;
    estimate.std_error = std::sqrt(sop_nj.std_error * sop_nj.std_error / y2 +
                                   sop_nj.value * sop_nj.value * sop_j.std_error *
                                       sop_j.std_error / (y2 * y2));
    return estimate;
}

}  // namespace jamcov
