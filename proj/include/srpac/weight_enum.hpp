#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srpac/polar.hpp"
#include "srpac/precode.hpp"

namespace srpac {

enum class CensusMethod { exhaustive, lsd };

// Weight spectrum plus the per-coset breakdown of the minimum-weight
// codewords. A codeword belongs to coset i when i is the first nonzero index
// of its polar-transform input u = v * M (Definition-1 coset leader).
struct WeightCensus {
    std::uint64_t wmin = 0;                            // 0 iff no nonzero codeword seen
    std::map<std::uint64_t, std::uint64_t> spectrum;   // codeword weight -> count
    std::map<int, std::uint64_t> coset_counts;         // leader index -> count at wmin
    CensusMethod method = CensusMethod::exhaustive;
    int list_size = 0;      // lsd only
    bool truncated = false; // lsd filled its list: counts may be lower bounds

    // identity of the censused code, used to reject apples-to-oranges diffs
    int n = 0;
    int K = 0;
    std::vector<int> info_set;
    PrecodeMode mode = PrecodeMode::none;
    std::vector<std::uint8_t> poly;

    std::uint64_t total_min_weight() const {
        auto it = spectrum.find(wmin);
        return it == spectrum.end() ? 0 : it->second;
    }
};

// Walks all 2^K - 1 nonzero messages in Gray-code order, maintaining the
// codeword and the input vector u incrementally. K is capped because the walk
// is exponential.
WeightCensus exhaustive_census(const PrecodeSpec& precode, const CodeSpec& code,
                               int max_K = 20);

// The paper's enumeration method: transmit the all-zero codeword at a high
// SNR, list-sphere-decode with list size L, drop the all-zero survivor and
// classify the rest. Counts are lower bounds whenever the list filled up.
WeightCensus lsd_census(const PrecodeSpec& precode, const CodeSpec& code, int list_size,
                        double snr_db = 20.0, std::uint64_t seed = 1);

// Doubles the list size until two successive censuses agree on wmin, the
// total and every per-coset count; returns the last one.
WeightCensus lsd_census_stabilized(const PrecodeSpec& precode, const CodeSpec& code,
                                   int initial_list_size, double snr_db = 20.0,
                                   std::uint64_t seed = 1, int max_doublings = 8);

struct CensusDiff {
    bool identical = true;
    std::vector<std::string> notes;
};

// Structured diff of two censuses over the same code; throws if the code
// identities differ.
CensusDiff census_compare(const WeightCensus& a, const WeightCensus& b);

}  // namespace srpac
