#include <doctest.h>

#include <cmath>

#include "jamcov/channel.hpp"
#include "jamcov/errors.hpp"
#include "jamcov/montecarlo.hpp"

using namespace jamcov;

TEST_CASE("exponential_from_uniform fixed point and edge cases") {
    // u = 1 - e^-1 is the inverse-CDF fixed point at rate 1.
    CHECK(exponential_from_uniform(1.0 - std::exp(-1.0), 1.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(exponential_from_uniform(0.0, 3.0) == 0.0);
    CHECK_THROWS_AS(exponential_from_uniform(0.5, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(exponential_from_uniform(0.5, -1.0), InvalidParameterError);
}

TEST_CASE("exponential draws scale exactly with the rate") {
    UniformStream a(99, 0);
    UniformStream b(99, 0);
    for (int i = 0; i < 1000; ++i) {
        const double rate = 0.25 + i * 0.01;
        const double scaled = sample_channel_gain(rate, a);
        const double unit = sample_channel_gain(1.0, b);
        CHECK(scaled == unit / rate);
    }
}

TEST_CASE("uniform substreams are reproducible and distinct") {
    UniformStream s1(5, 7);
    UniformStream s2(5, 7);
    UniformStream other(5, 8);
    bool all_same = true;
    for (int i = 0; i < 100; ++i) {
        const double v = s1.next();
        CHECK(v == s2.next());
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        if (v != other.next()) {
            all_same = false;
        }
    }
    CHECK_FALSE(all_same);
}

TEST_CASE("sample mean obeys the law of large numbers") {
    const double rate = ground_fading_rate(20.0, 0.3);  // 20^0.3
    UniformStream stream(12345, 0);
    const int n = 1'000'000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += sample_channel_gain(rate, stream);
    }
    const double mean = sum / n;
    const double expected = 0.40709053153690438;  // 1/20^0.3
    // Exponential std dev equals the mean; allow four standard errors.
    CHECK(std::abs(mean - expected) < 4.0 * expected / std::sqrt(double(n)));
}

TEST_CASE("empirical_sop matches the one-sided CDF when b vanishes") {
    const SnrCoefficients coeffs{4.0, 1e-280, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.0, 1.5};
    const McConfig mc{200'000, 7, 32, 0};
    const McEstimate est = empirical_sop(coeffs, params, mc);
    const double closed = 1.0 - std::exp(-(params.omega_ab / coeffs.a));
    CHECK(std::abs(est.value - closed) < 4.0 * est.std_error);
    CHECK(est.n == 200'000);
}

TEST_CASE("empirical_sop matches the closed form on a reference tuple") {
    const SnrCoefficients coeffs{15, 15, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.4564560522315809, 1.9952623149688796};
    const McConfig mc{1'000'000, 42, 64, 0};
    const McEstimate est = empirical_sop(coeffs, params, mc);
    CHECK(std::abs(est.value - 0.75480307549177242) < 4.0 * est.std_error);
}

TEST_CASE("empirical_sop saturates for huge target rates") {
    const SnrCoefficients coeffs{4.0, 2.0, JammingMode::jamming};
    const SecrecyParams params{40.0, 2.0, 1.5};
    const McConfig mc{10'000, 3, 16, 0};
    CHECK(empirical_sop(coeffs, params, mc).value == 1.0);
}

TEST_CASE("empirical_sop is bit-identical across worker counts") {
    const SnrCoefficients coeffs{8.0, 3.0, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.0, 1.5};
    McConfig mc{100'000, 11, 64, 1};
    const McEstimate one = empirical_sop(coeffs, params, mc);
    mc.workers = 2;
    const McEstimate two = empirical_sop(coeffs, params, mc);
    mc.workers = 5;
    const McEstimate five = empirical_sop(coeffs, params, mc);
    CHECK(one.value == two.value);
    CHECK(one.value == five.value);
    CHECK(one.std_error == two.std_error);
    CHECK(one.std_error == five.std_error);
}

TEST_CASE("standard error halves when the sample count quadruples") {
    const SnrCoefficients coeffs{8.0, 3.0, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.0, 1.5};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        McConfig small{100'000, seed, 64, 0};
        McConfig big{400'000, seed, 64, 0};
        const double se_small = empirical_sop(coeffs, params, small).std_error;
        const double se_big = empirical_sop(coeffs, params, big).std_error;
        CHECK(std::abs(se_big / (se_small / 2.0) - 1.0) < 0.10);
    }
}

TEST_CASE("empirical_delta sits on 1 under zero jamming") {
    const SnrCoefficients nj{15, 15, JammingMode::no_jamming};
    const SnrCoefficients j{15, 15, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.0, 1.5};
    const McConfig mc{200'000, 17, 64, 0};
    const McEstimate est = empirical_delta(nj, j, params, mc);
    CHECK(std::abs(est.value - 1.0) < 4.0 * est.std_error);
}

TEST_CASE("empirical_delta tracks the closed-form ratio") {
    const SnrCoefficients nj{15, 15, JammingMode::no_jamming};
    const SnrCoefficients j{9.0, 2.5, JammingMode::jamming};
    const SecrecyParams params{1.0, 2.4564560522315809, 1.9952623149688796};
    const McConfig mc{1'000'000, 23, 64, 0};
    const McEstimate est = empirical_delta(nj, j, params, mc);
    CHECK(std::abs(est.value - delta(nj, j, params)) < 4.0 * est.std_error);
}

TEST_CASE("empirical_delta flags an all-secrecy jamming stream") {
    // Outage is essentially impossible here, so the denominator estimate
    // collapses to zero.
    const SnrCoefficients nj{1e6, 1e6, JammingMode::no_jamming};
    const SnrCoefficients j{1e6, 1e-9, JammingMode::jamming};
    const SecrecyParams params{0.001, 1.0, 1.0};
    const McConfig mc{1000, 29, 8, 0};
    CHECK_THROWS_AS(empirical_delta(nj, j, params, mc), InsufficientSamplesError);
}

TEST_CASE("mc config validation") {
    McConfig mc{999, 1, 64, 0};
    CHECK_THROWS_AS(mc.validate(), ValidationError);
    mc = {1000, 1, 0, 0};
    CHECK_THROWS_AS(mc.validate(), ValidationError);
}
