#include <cmath>

#include "doctest.h"
#include "srpac/channel.hpp"

using namespace srpac;

TEST_CASE("BPSK mapping") {
    CHECK(bpsk_modulate(BitVec::from_string01("0000")) == std::vector<double>{1, 1, 1, 1});
    CHECK(bpsk_modulate(BitVec::from_string01("01")) == std::vector<double>{1, -1});

    BitVec c = BitVec::from_string01("0110101");
    BitVec flipped = c;
    for (std::size_t i = 0; i < c.size(); ++i) flipped.flip(i);
    const auto s = bpsk_modulate(c);
    const auto sf = bpsk_modulate(flipped);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(sf[i] == -s[i]);
}

TEST_CASE("Eb/N0 to noise variance") {
    CHECK(ebn0_to_sigma2(0.0, 0.5) == doctest::Approx(1.0));
    CHECK(ebn0_to_sigma2(3.0103, 0.5) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(ebn0_to_sigma2(0.0, 1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ebn0_to_sigma2(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ebn0_to_sigma2(0.0, 1.5), std::invalid_argument);

    const ChannelParams p = ChannelParams::make(2.0, 0.25, 42);
    CHECK(p.noise_variance ==
          doctest::Approx(1.0 / (2.0 * 0.25 * std::pow(10.0, 0.2))));
}

TEST_CASE("AWGN moments over a million draws") {
    const std::size_t count = 1'000'000;
    std::vector<double> s(count, 0.0);
    SplitMix64 rng(stream_seed(2024, 0, 0));
    GaussianSampler gauss(rng);
    const std::vector<double> y = awgn(s, 1.0, gauss);

    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(count);
    CHECK(std::fabs(mean) < 5e-3);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : y) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(count);
    m3 /= static_cast<double>(count);
    m4 /= static_cast<double>(count);
    CHECK(m2 == doctest::Approx(1.0).epsilon(0.01));
    const double skew = m3 / std::pow(m2, 1.5);
    const double excess_kurtosis = m4 / (m2 * m2) - 3.0;
    CHECK(std::fabs(skew) < 0.02);
    CHECK(std::fabs(excess_kurtosis) < 0.02);
}

TEST_CASE("awgn scales with the requested variance") {
    const std::size_t count = 1'000'000;
    std::vector<double> s(count, 0.5);
    SplitMix64 rng(stream_seed(7, 1, 9));
    GaussianSampler gauss(rng);
    const double sigma2 = 0.37;
    const std::vector<double> y = awgn(s, sigma2, gauss);
    double var = 0.0;
    for (std::size_t i = 0; i < count; ++i) var += (y[i] - s[i]) * (y[i] - s[i]);
    var /= static_cast<double>(count);
    CHECK(var == doctest::Approx(sigma2).epsilon(0.01));
}

TEST_CASE("identical seeds reproduce the noise stream; different streams differ") {
    std::vector<double> s(64, 1.0);
    SplitMix64 a(stream_seed(5, 2, 17)), b(stream_seed(5, 2, 17)), c(stream_seed(5, 2, 18));
    GaussianSampler ga(a), gb(b), gc(c);
    const auto ya = awgn(s, 0.5, ga);
    const auto yb = awgn(s, 0.5, gb);
    const auto yc = awgn(s, 0.5, gc);
    CHECK(ya == yb);
    CHECK(ya != yc);
}

TEST_CASE("vanishing noise recovers the modulated signal") {
    std::vector<double> s{1.0, -1.0, 1.0};
    SplitMix64 rng(3);
    GaussianSampler gauss(rng);
    const auto y = awgn(s, 1e-30, gauss);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(y[i] == doctest::Approx(s[i]).epsilon(1e-9));
    CHECK_THROWS_AS(awgn(s, 0.0, gauss), std::invalid_argument);
}
