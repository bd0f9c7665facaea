#include "srpac/weight_enum.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "srpac/channel.hpp"
#include "srpac/sphere_decoder.hpp"

namespace srpac {

namespace {

void stamp_identity(WeightCensus& census, const PrecodeSpec& precode, const CodeSpec& code) {
    census.n = code.n;
    census.K = code.K;
    census.info_set = code.info_set;
    census.mode = precode.mode;
    census.poly = precode.poly;
}

}  // namespace

WeightCensus exhaustive_census(const PrecodeSpec& precode, const CodeSpec& code, int max_K) {
    if (code.K > max_K)
        throw std::invalid_argument("exhaustive_census: K = " + std::to_string(code.K) +
                                    " exceeds cap " + std::to_string(max_K));
    const BitMatrix p = build_p(precode, code);
    const BitMatrix gen = p * polar_transform(code.n);

    // counts[w][i]: codewords of weight w whose input u has first nonzero
    // index i. u never vanishes for a nonzero message since M is invertible.
    const std::size_t N = static_cast<std::size_t>(code.N);
    std::vector<std::vector<std::uint64_t>> counts(N + 1, std::vector<std::uint64_t>(N, 0));

    BitVec x(N), u(N);
    const std::uint64_t total = std::uint64_t(1) << code.K;
    for (std::uint64_t k = 1; k < total; ++k) {
        // Gray step: message bit ctz(k) flips, so one row of each matrix does.
        const int row = code.info_set[static_cast<std::size_t>(std::countr_zero(k))];
        x ^= gen.row(static_cast<std::size_t>(row));
        u ^= p.row(static_cast<std::size_t>(row));
        counts[x.popcount()][u.first_set()]++;
    }

    WeightCensus census;
    census.method = CensusMethod::exhaustive;
    stamp_identity(census, precode, code);
    for (std::size_t w = 1; w <= N; ++w) {
        std::uint64_t row_total = 0;
        for (std::size_t i = 0; i < N; ++i) row_total += counts[w][i];
        if (row_total == 0) continue;
        census.spectrum[w] = row_total;
        if (census.wmin == 0) census.wmin = w;
    }
    if (census.wmin != 0)
        for (std::size_t i = 0; i < N; ++i)
            if (counts[census.wmin][i] != 0)
                census.coset_counts[static_cast<int>(i)] = counts[census.wmin][i];
    return census;
}

WeightCensus lsd_census(const PrecodeSpec& precode, const CodeSpec& code, int list_size,
                        double snr_db, std::uint64_t seed) {
    if (list_size < 2) throw std::invalid_argument("lsd_census: list size must be >= 2");
    const EffectiveGenerator gen = effective_generator(precode, code);

    // All-zero codeword over a high-SNR channel; noise is still sampled so the
    // procedure matches the enumeration protocol, and the fixed seed keeps the
    // census reproducible.
    const double sigma2 = ebn0_to_sigma2(snr_db, code.rate());
    SplitMix64 rng(stream_seed(seed, 0x6c7364, 0));  // dedicated census stream
    GaussianSampler gauss(rng);
    const std::vector<double> s(static_cast<std::size_t>(code.N), 1.0);
    const std::vector<double> y = awgn(s, sigma2, gauss);

    const std::vector<DecodeOutcome> list = list_sphere_decode(gen, code, y, list_size);

    WeightCensus census;
    census.method = CensusMethod::lsd;
    census.list_size = list_size;
    census.truncated = static_cast<int>(list.size()) == list_size;
    stamp_identity(census, precode, code);

    std::map<std::uint64_t, std::map<int, std::uint64_t>> by_weight;
    for (const DecodeOutcome& out : list) {
        if (!out.v_hat.any()) continue;  // drop the transmitted all-zero entry
        const BitVec u = precode_input(precode, code, out.v_hat);
        const std::uint64_t w = polar_encode(u).popcount();
        by_weight[w][static_cast<int>(u.first_set())]++;
    }
    for (const auto& [w, cosets] : by_weight) {
        std::uint64_t row_total = 0;
        for (const auto& [i, c] : cosets) row_total += c;
        census.spectrum[w] = row_total;
    }
    if (!by_weight.empty()) {
        census.wmin = by_weight.begin()->first;
        census.coset_counts = by_weight.begin()->second;
    }
    return census;
}

WeightCensus lsd_census_stabilized(const PrecodeSpec& precode, const CodeSpec& code,
                                   int initial_list_size, double snr_db, std::uint64_t seed,
                                   int max_doublings) {
    WeightCensus prev = lsd_census(precode, code, initial_list_size, snr_db, seed);
    int list_size = initial_list_size;
    for (int step = 0; step < max_doublings; ++step) {
        list_size *= 2;
        WeightCensus next = lsd_census(precode, code, list_size, snr_db, seed);
        const bool stable = prev.wmin == next.wmin &&
                            prev.total_min_weight() == next.total_min_weight() &&
                            prev.coset_counts == next.coset_counts;
        if (stable) return next;
        prev = std::move(next);
    }
    return prev;  // still truncated; the flag tells the caller
}

CensusDiff census_compare(const WeightCensus& a, const WeightCensus& b) {
    if (a.n != b.n || a.K != b.K || a.info_set != b.info_set)
        throw std::invalid_argument("census_compare: censuses describe different codes");

    CensusDiff diff;
    auto note = [&](const std::string& line) {
        diff.identical = false;
        diff.notes.push_back(line);
    };

    if (a.wmin != b.wmin) {
        std::ostringstream os;
        os << "wmin differs: " << a.wmin << " vs " << b.wmin;
        note(os.str());
    }
    if (a.total_min_weight() != b.total_min_weight()) {
        std::ostringstream os;
        os << "minimum-weight total differs: " << a.total_min_weight() << " vs "
           << b.total_min_weight();
        note(os.str());
    }
    std::map<int, std::uint64_t> all;
    for (const auto& [i, c] : a.coset_counts) all[i] = 1;
    for (const auto& [i, c] : b.coset_counts) all[i] = 1;
    for (const auto& [i, unused] : all) {
        const auto ita = a.coset_counts.find(i);
        const auto itb = b.coset_counts.find(i);
        const std::uint64_t ca = ita == a.coset_counts.end() ? 0 : ita->second;
        const std::uint64_t cb = itb == b.coset_counts.end() ? 0 : itb->second;
        if (ca != cb) {
            std::ostringstream os;
            os << "coset " << i << ": " << ca << " vs " << cb;
            note(os.str());
        }
    }
    if ((a.truncated || b.truncated) && !diff.identical)
        diff.notes.push_back("note: a truncated lsd census only lower-bounds the counts");
    return diff;
}

}  // namespace srpac
