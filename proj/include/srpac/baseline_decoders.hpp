#pragma once

#include <span>
#include <vector>

#include "srpac/bits.hpp"
#include "srpac/polar.hpp"

namespace srpac {

struct ScOptions {
    bool min_sum = false;  // exact f/g updates by default
};

// LLR_i = 2 y_i / sigma^2 for BPSK over AWGN.
std::vector<double> channel_llrs(std::span<const double> y, double noise_variance);

// Successive cancellation over the natural-order transform; frozen bits are
// decided zero. Returns the K message bits.
BitVec sc_decode(const CodeSpec& code, std::span<const double> llr, const ScOptions& = {});

// LLR-based successive-cancellation list decoding. Returns the message of the
// lowest-path-metric survivor; no CRC is involved. list_size must be a power
// of two.
BitVec scl_decode(const CodeSpec& code, std::span<const double> llr, int list_size,
                  const ScOptions& = {});

}  // namespace srpac
