#include "srpac/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace srpac {

double ebn0_to_sigma2(double ebn0_db, double rate) {
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("ebn0_to_sigma2: rate must be in (0, 1]");
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

ChannelParams ChannelParams::make(double ebn0_db, double rate, std::uint64_t seed) {
    ChannelParams p;
    p.ebn0_db = ebn0_db;
    p.rate = rate;
    p.noise_variance = ebn0_to_sigma2(ebn0_db, rate);
    p.seed = seed;
    return p;
}

std::vector<double> bpsk_modulate(const BitVec& c) {
    std::vector<double> s(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) s[i] = c.get(i) ? -1.0 : 1.0;
    return s;
}

std::vector<double> awgn(std::span<const double> s, double noise_variance,
                         GaussianSampler& gauss) {
    if (!(noise_variance > 0.0)) throw std::invalid_argument("awgn: variance must be positive");
    const double sigma = std::sqrt(noise_variance);
    std::vector<double> y(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) y[i] = s[i] + sigma * gauss.next();
    return y;
}

}  // namespace srpac
