#include "srpac/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "srpac/baseline_decoders.hpp"
#include "srpac/channel.hpp"
#include "srpac/sphere_decoder.hpp"

namespace srpac {

DecoderSpec DecoderSpec::parse(const std::string& s) {
    DecoderSpec spec;
    std::string kind = s;
    if (auto pos = s.find(':'); pos != std::string::npos) {
        kind = s.substr(0, pos);
        try {
            spec.list_size = std::stoi(s.substr(pos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("decoder: bad list size in '" + s + "'");
        }
        if (spec.list_size < 1) throw std::invalid_argument("decoder: list size must be >= 1");
    }
    if (kind == "sd")
        spec.kind = DecoderKind::sd;
    else if (kind == "lsd")
        spec.kind = DecoderKind::lsd;
    else if (kind == "sc")
        spec.kind = DecoderKind::sc;
    else if (kind == "scl")
        spec.kind = DecoderKind::scl;
    else
        throw std::invalid_argument("decoder: expected sd|lsd:L|sc|scl:L, got '" + s + "'");
    return spec;
}

std::string DecoderSpec::to_string() const {
    switch (kind) {
        case DecoderKind::sd: return "sd";
        case DecoderKind::lsd: return "lsd:" + std::to_string(list_size);
        case DecoderKind::sc: return "sc";
        case DecoderKind::scl: return "scl:" + std::to_string(list_size);
    }
    return "?";
}

void SimConfig::validate() const {
    if (construction != "bhattacharyya" && construction != "file")
        throw std::invalid_argument("construction must be 'bhattacharyya' or 'file'");
    if (construction == "file" && info_file.empty())
        throw std::invalid_argument("construction 'file' requires info_file");
    if (snr_grid_db.empty()) throw std::invalid_argument("empty SNR grid");
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
        if (!(snr_grid_db[i - 1] < snr_grid_db[i]))
            throw std::invalid_argument("SNR grid must be strictly increasing");
    if (target_block_errors < 1) throw std::invalid_argument("target_block_errors must be >= 1");
    if (max_trials < 1) throw std::invalid_argument("max_trials must be >= 1");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");

    const bool precoded = precode.mode != PrecodeMode::none;
    if ((decoder.kind == DecoderKind::sc || decoder.kind == DecoderKind::scl) && precoded)
        throw std::invalid_argument("sc/scl baselines only decode plain polar (mode none)");
    if ((decoder.kind == DecoderKind::sd || decoder.kind == DecoderKind::lsd) &&
        precode.mode == PrecodeMode::forward)
        throw std::invalid_argument(
            "sphere decoding is incompatible with forward precoding (non-triangular generator)");
}

CodeSpec SimConfig::build_code() const {
    if (construction == "file") return info_set_from_file(n, K > 0 ? K : -1, info_file);
    return bhattacharyya_info_set(n, K, design_snr_db);
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<double> parse_snr_grid(const std::string& s) {
    std::vector<double> grid;
    if (s.find(':') != std::string::npos) {
        double start, step, stop;
        char c1, c2;
        std::istringstream is(s);
        if (!(is >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' ||
            !(step > 0.0))
            throw std::invalid_argument("SNR grid: expected start:step:stop, got '" + s + "'");
        for (double v = start; v <= stop + step / 2; v += step) grid.push_back(v);
        return grid;
    }
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            grid.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("SNR grid: not a number: '" + tok + "'");
        }
    }
    return grid;
}

void apply_config_file(SimConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n")
                config.n = std::stoi(value);
            else if (key == "k")
                config.K = std::stoi(value);
            else if (key == "construction")
                config.construction = value;
            else if (key == "design_snr_db")
                config.design_snr_db = std::stod(value);
            else if (key == "info_file")
                config.info_file = value;
            else if (key == "mode")
                config.precode.mode = precode_mode_from_string(value);
            else if (key == "poly")
                config.precode = PrecodeSpec::parse(value, config.precode.mode);
            else if (key == "decoder")
                config.decoder = DecoderSpec::parse(value);
            else if (key == "snr_grid_db")
                config.snr_grid_db = parse_snr_grid(value);
            else if (key == "max_trials")
                config.max_trials = std::stoull(value);
            else if (key == "target_block_errors")
                config.target_block_errors = std::stoull(value);
            else if (key == "seed")
                config.seed = std::stoull(value);
            else if (key == "threads")
                config.threads = std::stoi(value);
            else if (key == "output")
                config.output = value;
            else if (key == "sd_lower_bound")
                config.sd_lower_bound = value == "1" || value == "true";
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": bad value for '" +
                                        key + "'");
        }
    }
}

namespace {

struct TrialResult {
    std::uint8_t error = 0;
    std::uint64_t nodes = 0;
};

struct TrialContext {
    const SimConfig& config;
    const CodeSpec& code;
    const EffectiveGenerator& gen;
    double sigma2;
    std::size_t snr_index;
};

TrialResult run_trial(const TrialContext& ctx, std::uint64_t trial) {
    SplitMix64 rng(stream_seed(ctx.config.seed, ctx.snr_index, trial));
    const CodeSpec& code = ctx.code;

    BitVec message(static_cast<std::size_t>(code.K));
    for (int k = 0; k < code.K; ++k)
        if (rng.next_bit()) message.set(static_cast<std::size_t>(k), true);

    const BitVec codeword = encode(ctx.config.precode, code, message);
    GaussianSampler gauss(rng);
    const std::vector<double> y = awgn(bpsk_modulate(codeword), ctx.sigma2, gauss);

    TrialResult result;
    BitVec decoded;
    switch (ctx.config.decoder.kind) {
        case DecoderKind::sd: {
            SphereOptions opts{ctx.config.sd_lower_bound};
            DecodeOutcome out = sphere_decode(ctx.gen, code, y, opts);
            decoded = std::move(out.message_hat);
            result.nodes = out.nodes_visited;
            break;
        }
        case DecoderKind::lsd: {
            SphereOptions opts{ctx.config.sd_lower_bound};
            auto list = list_sphere_decode(ctx.gen, code, y, ctx.config.decoder.list_size, opts);
            decoded = std::move(list.front().message_hat);
            result.nodes = list.front().nodes_visited;
            break;
        }
        case DecoderKind::sc: {
            decoded = sc_decode(code, channel_llrs(y, ctx.sigma2));
            break;
        }
        case DecoderKind::scl: {
            decoded = scl_decode(code, channel_llrs(y, ctx.sigma2),
                                 ctx.config.decoder.list_size);
            break;
        }
    }
    result.error = decoded == message ? 0 : 1;
    return result;
}

}  // namespace

SimResult run_bler(const SimConfig& config) {
    config.validate();
    const CodeSpec code = config.build_code();
    const EffectiveGenerator gen = effective_generator(config.precode, code);

    int workers = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    constexpr std::uint64_t kBatch = 4096;  // fixed batch so results never depend on workers

    SimResult result;
    for (std::size_t s = 0; s < config.snr_grid_db.size(); ++s) {
        const double ebn0_db = config.snr_grid_db[s];
        const TrialContext ctx{config, code, gen,
                               ebn0_to_sigma2(ebn0_db, code.rate()), s};

        const auto t0 = std::chrono::steady_clock::now();
        std::uint64_t trials = 0, errors = 0, nodes_total = 0;
        std::vector<TrialResult> batch(kBatch);
        bool stop = false;
        for (std::uint64_t base = 0; base < config.max_trials && !stop; base += kBatch) {
            const std::uint64_t count = std::min(kBatch, config.max_trials - base);

            if (workers == 1 || count < 64) {
                for (std::uint64_t i = 0; i < count; ++i) batch[i] = run_trial(ctx, base + i);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(workers));
                const std::uint64_t chunk = (count + workers - 1) / workers;
                for (int w = 0; w < workers; ++w) {
                    const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, count);
                    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, count);
                    if (lo >= hi) break;
                    pool.emplace_back([&, lo, hi] {
                        for (std::uint64_t i = lo; i < hi; ++i)
                            batch[i] = run_trial(ctx, base + i);
                    });
                }
                for (auto& t : pool) t.join();
            }

            // Sequential prefix scan: trial indices beyond the stopping point
            // are discarded even though they were computed.
            for (std::uint64_t i = 0; i < count; ++i) {
                ++trials;
                errors += batch[i].error;
                nodes_total += batch[i].nodes;
                if (errors >= config.target_block_errors) {
                    stop = true;
                    break;
                }
            }
        }
        const auto t1 = std::chrono::steady_clock::now();

        SimRow row;
        row.ebn0_db = ebn0_db;
        row.trials = trials;
        row.block_errors = errors;
        row.bler = static_cast<double>(errors) / static_cast<double>(trials);
        row.mean_nodes = static_cast<double>(nodes_total) / static_cast<double>(trials);
        row.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
        result.rows.push_back(row);
    }
    return result;
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

void write_results_csv(std::ostream& out, const SimResult& result) {
    out << "ebn0_db,trials,block_errors,bler,mean_nodes,wall_time_s\n";
    for (const SimRow& r : result.rows)
        out << fmt_double(r.ebn0_db) << ',' << r.trials << ',' << r.block_errors << ','
            << fmt_double(r.bler) << ',' << fmt_double(r.mean_nodes) << ','
            << fmt_double(r.wall_time_s) << '\n';
}

SimResult read_results_csv(std::istream& in) {
    SimResult result;
    std::string line;
    if (!std::getline(in, line) || trim(line) != "ebn0_db,trials,block_errors,bler,mean_nodes,wall_time_s")
        throw std::invalid_argument("results CSV: missing or unexpected header");
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(is, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw std::invalid_argument("results CSV: bad row: " + line);
        SimRow r;
        try {
            r.ebn0_db = std::stod(fields[0]);
            r.trials = std::stoull(fields[1]);
            r.block_errors = std::stoull(fields[2]);
            r.bler = std::stod(fields[3]);
            r.mean_nodes = std::stod(fields[4]);
            r.wall_time_s = std::stod(fields[5]);
        } catch (const std::exception&) {
            throw std::invalid_argument("results CSV: bad row: " + line);
        }
        result.rows.push_back(r);
    }
    return result;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double union_bound(const CodeSpec& code, const WeightCensus& census, double ebn0_db) {
    if (census.wmin == 0 || census.spectrum.empty())
        throw std::invalid_argument("union_bound: empty census");
    const double a = static_cast<double>(census.total_min_weight());
    const double arg = std::sqrt(2.0 * static_cast<double>(census.wmin) * code.rate() *
                                 std::pow(10.0, ebn0_db / 10.0));
    return a * q_function(arg);
}

std::string render_coset_table(const CodeSpec& code, const std::vector<CensusColumn>& columns) {
    std::set<int> leaders;
    for (const CensusColumn& col : columns)
        for (const auto& [i, c] : col.census.coset_counts) leaders.insert(i);

    std::ostringstream os;
    os << std::left << std::setw(6) << "i" << std::setw(8) << "w(g_i)";
    for (const CensusColumn& col : columns) os << std::setw(14) << col.scheme;
    os << '\n';
    for (int i : leaders) {
        os << std::left << std::setw(6) << i << std::setw(8) << row_weight(code.n, i);
        for (const CensusColumn& col : columns) {
            const auto it = col.census.coset_counts.find(i);
            if (it != col.census.coset_counts.end()) {
                os << std::setw(14) << it->second;
            } else if (col.census.mode == PrecodeMode::none && !code.is_info(i)) {
                os << std::setw(14) << "";  // frozen leader cannot occur without precoding
            } else {
                os << std::setw(14) << 0;
            }
        }
        os << '\n';
    }
    os << std::left << std::setw(6) << "total" << std::setw(8) << "";
    for (const CensusColumn& col : columns) os << std::setw(14) << col.census.total_min_weight();
    os << '\n';
    return os.str();
}

std::string render_summary_table(const std::vector<CensusColumn>& columns) {
    std::ostringstream os;
    os << std::left << std::setw(14) << "scheme" << std::setw(8) << "wmin" << std::setw(12)
       << "A_wmin" << '\n';
    for (const CensusColumn& col : columns)
        os << std::left << std::setw(14) << col.scheme << std::setw(8) << col.census.wmin
           << std::setw(12) << col.census.total_min_weight() << '\n';
    return os.str();
}

void write_census_csv(std::ostream& out, const std::vector<CensusColumn>& columns) {
    out << "coset_index,row_weight,count,scheme,wmin,method,list_size,truncated\n";
    for (const CensusColumn& col : columns) {
        const WeightCensus& c = col.census;
        for (const auto& [i, count] : c.coset_counts)
            out << i << ',' << row_weight(c.n, i) << ',' << count << ',' << col.scheme << ','
                << c.wmin << ',' << (c.method == CensusMethod::lsd ? "lsd" : "exhaustive") << ','
                << c.list_size << ',' << (c.truncated ? 1 : 0) << '\n';
    }
}

}  // namespace srpac
