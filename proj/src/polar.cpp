#include "srpac/polar.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace srpac {

CodeSpec CodeSpec::from_info_set(int n, std::vector<int> info) {
    if (n < 1 || n > kMaxLogBlockLength)
        throw std::invalid_argument("CodeSpec: n must be in [1, " +
                                    std::to_string(kMaxLogBlockLength) + "]");
    const int N = 1 << n;
    std::sort(info.begin(), info.end());
    if (info.empty() || static_cast<int>(info.size()) > N)
        throw std::invalid_argument("CodeSpec: K must be in [1, N]");
    if (std::adjacent_find(info.begin(), info.end()) != info.end())
        throw std::invalid_argument("CodeSpec: duplicate index in information set");
    if (info.front() < 0 || info.back() >= N)
        throw std::invalid_argument("CodeSpec: index out of [0, N-1]");

    CodeSpec spec;
    spec.n = n;
    spec.N = N;
    spec.K = static_cast<int>(info.size());
    spec.info_set = std::move(info);
    spec.info_mask = BitVec(static_cast<std::size_t>(N));
    for (int i : spec.info_set) spec.info_mask.set(static_cast<std::size_t>(i), true);
    return spec;
}

std::vector<int> CodeSpec::frozen_set() const {
    std::vector<int> frozen;
    frozen.reserve(N - K);
    for (int i = 0; i < N; ++i)
        if (!is_info(i)) frozen.push_back(i);
    return frozen;
}

BitMatrix polar_transform(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("polar_transform: n out of range [1, " +
                                    std::to_string(max_n) + "]");
    const std::size_t N = std::size_t(1) << n;
    BitMatrix g(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if ((i & j) == j) g.set(i, j, true);  // supp(bin(j)) subset of supp(bin(i))
    return g;
}

std::uint64_t row_weight(int n, int i) {
    if (n < 1 || n > kMaxLogBlockLength) throw std::invalid_argument("row_weight: n out of range");
    if (i < 0 || i >= (1 << n)) throw std::out_of_range("row_weight: index out of range");
    return std::uint64_t(1) << std::popcount(static_cast<unsigned>(i));
}

std::uint64_t min_distance(const CodeSpec& spec) {
    std::uint64_t best = std::uint64_t(1) << spec.n;
    for (int i : spec.info_set) best = std::min(best, row_weight(spec.n, i));
    return best;
}

CodeSpec bhattacharyya_info_set(int n, int K, double design_snr_db) {
    if (n < 1 || n > kMaxLogBlockLength)
        throw std::invalid_argument("bhattacharyya_info_set: n out of range");
    const int N = 1 << n;
    if (K < 1 || K > N) throw std::invalid_argument("bhattacharyya_info_set: K out of [1, N]");

    // Initial Bhattacharyya parameter of the BI-AWGN channel with unit-energy
    // BPSK: Z = exp(-R * Eb/N0), kept as log Z.
    const double rate = static_cast<double>(K) / N;
    const double ebn0 = std::pow(10.0, design_snr_db / 10.0);
    std::vector<double> lz(static_cast<std::size_t>(N), -rate * ebn0);

    // Split from the most significant bit down so the per-index operation
    // order matches the natural-order (non-bit-reversed) transform.
    for (int k = n - 1; k >= 0; --k) {
        const int half = 1 << k;
        for (int base = 0; base < N; base += 2 * half) {
            for (int i = base; i < base + half; ++i) {
                const double a = lz[static_cast<std::size_t>(i)];
                lz[static_cast<std::size_t>(i)] = a + std::log(2.0 - std::exp(a));
                lz[static_cast<std::size_t>(i + half)] = 2.0 * a;
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(N));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double za = lz[static_cast<std::size_t>(a)], zb = lz[static_cast<std::size_t>(b)];
        if (za != zb) return za < zb;
        return a > b;  // deterministic tie break toward the higher index
    });
    order.resize(static_cast<std::size_t>(K));
    return CodeSpec::from_info_set(n, std::move(order));
}

std::vector<int> parse_index_list(std::istream& in) {
    std::vector<int> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            std::size_t used = 0;
            int value;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("index list: not a number: '" + tok + "'");
            }
            if (used != tok.size())
                throw std::invalid_argument("index list: trailing characters in '" + tok + "'");
            out.push_back(value);
        }
    }
    return out;
}

CodeSpec info_set_from_file(int n, int expected_K, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open information-set file: " + path);
    std::vector<int> indices = parse_index_list(in);
    if (expected_K >= 0 && static_cast<int>(indices.size()) != expected_K)
        throw std::invalid_argument("information-set file " + path + " holds " +
                                    std::to_string(indices.size()) + " indices, expected " +
                                    std::to_string(expected_K));
    return CodeSpec::from_info_set(n, std::move(indices));
}

void write_index_list(std::ostream& out, const std::vector<int>& indices) {
    for (std::size_t i = 0; i < indices.size(); ++i)
        out << indices[i] << (i + 1 < indices.size() ? "\n" : "\n");
}

void polar_encode_inplace(BitVec& u) {
    const std::size_t N = u.size();
    if (N == 0 || (N & (N - 1)) != 0)
        throw std::invalid_argument("polar_encode: length must be a power of two");
    auto& w = u.words();

    // Stage h pairs bit j with bit j+h inside blocks of 2h. For h < 64 the
    // pairing stays inside one word and reduces to a masked shifted xor; the
    // mask pattern repeats cleanly because h is a power of two.
    static constexpr std::uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (std::size_t h = 1; h < N; h <<= 1) {
        if (h < 64) {
            const std::uint64_t m = kMask[std::countr_zero(h)];
            for (auto& word : w) word ^= (word >> h) & m;
        } else {
            const std::size_t hw = h / 64;
            for (std::size_t base = 0; base < w.size(); base += 2 * hw)
                for (std::size_t j = base; j < base + hw; ++j) w[j] ^= w[j + hw];
        }
    }
}

}  // namespace srpac
