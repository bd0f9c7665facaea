#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "srpac/polar.hpp"
#include "srpac/precode.hpp"
#include "srpac/weight_enum.hpp"

namespace srpac {

enum class DecoderKind { sd, lsd, sc, scl };

struct DecoderSpec {
    DecoderKind kind = DecoderKind::sd;
    int list_size = 1;

    // "sd", "lsd:64", "sc", "scl:8"
    static DecoderSpec parse(const std::string& s);
    std::string to_string() const;
};

struct SimConfig {
    int n = 3;
    int K = 4;
    std::string construction = "bhattacharyya";  // "bhattacharyya" | "file"
    double design_snr_db = 0.0;
    std::string info_file;

    PrecodeSpec precode;
    DecoderSpec decoder;

    std::vector<double> snr_grid_db{0.0, 1.0, 2.0};
    std::uint64_t max_trials = 1'000'000;
    std::uint64_t target_block_errors = 100;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = all hardware threads
    std::string output;
    bool sd_lower_bound = true;

    void validate() const;
    CodeSpec build_code() const;
};

// Flat key=value config file; '#' comments. Unknown keys are rejected.
void apply_config_file(SimConfig& config, const std::string& path);

// "a,b,c" or "start:step:stop" (inclusive stop within half a step).
std::vector<double> parse_snr_grid(const std::string& s);

struct SimRow {
    double ebn0_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    double bler = 0.0;
    double mean_nodes = 0.0;
    double wall_time_s = 0.0;
};

struct SimResult {
    std::vector<SimRow> rows;
    bool operator==(const SimResult&) const = default;
};

// Monte-Carlo sweep. Each SNR point runs trials until target_block_errors or
// max_trials, whichever first. Trial t of SNR index s draws from the stream
// keyed by (seed, s, t), and the stopping trial is decided on the sequential
// prefix of trial indices, so worker count never changes any output.
SimResult run_bler(const SimConfig& config);

void write_results_csv(std::ostream& out, const SimResult& result);
SimResult read_results_csv(std::istream& in);

// Q(x): upper tail of the standard normal distribution.
double q_function(double x);

// High-SNR ML approximation A_wmin * Q(sqrt(2 wmin R Eb/N0)).
double union_bound(const CodeSpec& code, const WeightCensus& census, double ebn0_db);

struct CensusColumn {
    std::string scheme;
    WeightCensus census;
};

// Per-coset table: one row per coset leader, one count column per scheme.
// Cells of zero-presence cosets print blank for the plain polar column when
// the leader is frozen, 0 otherwise.
std::string render_coset_table(const CodeSpec& code, const std::vector<CensusColumn>& columns);

// Summary table: wmin and the minimum-weight total per scheme.
std::string render_summary_table(const std::vector<CensusColumn>& columns);

void write_census_csv(std::ostream& out, const std::vector<CensusColumn>& columns);

}  // namespace srpac
