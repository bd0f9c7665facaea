#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "srpac/bits.hpp"
#include "srpac/rng.hpp"

namespace srpac {

// sigma^2 = N0/2 = 1 / (2 R Eb/N0) under unit-energy BPSK.
double ebn0_to_sigma2(double ebn0_db, double rate);

struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 0.5;
    double noise_variance = 1.0;
    std::uint64_t seed = 0;

    static ChannelParams make(double ebn0_db, double rate, std::uint64_t seed);
};

// s_i = 1 - 2 c_i.
std::vector<double> bpsk_modulate(const BitVec& c);

// y_i = s_i + n_i with n_i iid N(0, sigma^2). Draws happen in index order so
// a fixed stream reproduces the same vector.
std::vector<double> awgn(std::span<const double> s, double noise_variance,
                         GaussianSampler& gauss);

}  // namespace srpac
