#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "srpac/bits.hpp"
#include "srpac/polar.hpp"
#include "srpac/precode.hpp"

namespace srpac {

struct DecodeOutcome {
    BitVec v_hat;        // input vector estimate, length N
    BitVec message_hat;  // information bits of v_hat, length K
    double sed = std::numeric_limits<double>::infinity();
    std::uint64_t nodes_visited = 0;
    std::uint64_t leaves_found = 0;
};

struct SphereOptions {
    // Per-position lower-bound pruning (a pure lower bound: disabling it can
    // only increase the visited node count, never change the result).
    bool use_lower_bound = true;
};

// Branch metric of Eq-style squared Euclidean distance: (y - (1 - 2x))^2.
inline double branch_metric(double y_i, int x_bit) {
    const double d = y_i - (1.0 - 2.0 * x_bit);
    return d * d;
}

// Per-position two-case minimum min((y_i-1)^2, (y_i+1)^2).
std::vector<double> lower_bounds(std::span<const double> y);

// Depth-first ML decoder over a unit-lower-triangular effective generator.
// Starts from level N-1 with an infinite squared radius; the radius shrinks
// to each improving leaf metric. Throws on non-triangular generators.
DecodeOutcome sphere_decode(const EffectiveGenerator& gen, const CodeSpec& code,
                            std::span<const double> y, const SphereOptions& opts = {});

// List variant: the L leaves of smallest squared Euclidean distance, sorted
// ascending. The pruning threshold stays infinite until L leaves are
// collected and then tracks the L-th smallest leaf metric.
std::vector<DecodeOutcome> list_sphere_decode(const EffectiveGenerator& gen,
                                              const CodeSpec& code, std::span<const double> y,
                                              int list_size, const SphereOptions& opts = {});

}  // namespace srpac
