#include "srpac/baseline_decoders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srpac/precode.hpp"

namespace srpac {

namespace {

double f_combine(double a, double b, bool min_sum) {
    const double sgn = ((a < 0.0) != (b < 0.0)) ? -1.0 : 1.0;
    const double mag = std::min(std::fabs(a), std::fabs(b));
    if (min_sum) return sgn * mag;
    return sgn * mag + std::log1p(std::exp(-std::fabs(a + b))) -
           std::log1p(std::exp(-std::fabs(a - b)));
}

double g_combine(double a, double b, int left_bit) { return b + (left_bit ? -a : a); }

// softplus(-t): the exact path-metric penalty for deciding against t.
double penalty(double t, bool min_sum) {
    if (min_sum) return t < 0.0 ? -t : 0.0;
    return t >= 0.0 ? std::log1p(std::exp(-t)) : -t + std::log1p(std::exp(t));
}

// Plain SC as an independent recursion (the list decoder below uses iterative
// stage arrays instead, so the two can cross-check each other).
std::vector<std::uint8_t> sc_rec(const std::vector<double>& llr, int base, const CodeSpec& code,
                                 BitVec& u_hat, bool min_sum) {
    const int len = static_cast<int>(llr.size());
    if (len == 1) {
        const bool bit = code.is_info(base) && llr[0] < 0.0;
        u_hat.set(static_cast<std::size_t>(base), bit);
        return {static_cast<std::uint8_t>(bit)};
    }
    const int half = len / 2;
    std::vector<double> sub(static_cast<std::size_t>(half));
    for (int j = 0; j < half; ++j)
        sub[static_cast<std::size_t>(j)] = f_combine(llr[static_cast<std::size_t>(j)],
                                                     llr[static_cast<std::size_t>(j + half)],
                                                     min_sum);
    const std::vector<std::uint8_t> xa = sc_rec(sub, base, code, u_hat, min_sum);
    for (int j = 0; j < half; ++j)
        sub[static_cast<std::size_t>(j)] =
            g_combine(llr[static_cast<std::size_t>(j)], llr[static_cast<std::size_t>(j + half)],
                      xa[static_cast<std::size_t>(j)]);
    const std::vector<std::uint8_t> xb = sc_rec(sub, base + half, code, u_hat, min_sum);
    std::vector<std::uint8_t> x(static_cast<std::size_t>(len));
    for (int j = 0; j < half; ++j) {
        x[static_cast<std::size_t>(j)] = xa[static_cast<std::size_t>(j)] ^
                                         xb[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(j + half)] = xb[static_cast<std::size_t>(j)];
    }
    return x;
}

// Per-path state for the list decoder. l[s] holds the LLRs of the active
// stage-s block; pend[s] holds the re-encoded codeword of a completed left
// child awaiting its sibling's g-step.
struct Path {
    std::vector<std::vector<double>> l;        // s = 1..n, length N >> s
    std::vector<std::vector<std::uint8_t>> pend;
    BitVec u_hat;
    double pm = 0.0;
};

struct Candidate {
    double pm;
    int path;
    std::uint8_t bit;
};

}  // namespace

std::vector<double> channel_llrs(std::span<const double> y, double noise_variance) {
    if (!(noise_variance > 0.0)) throw std::invalid_argument("channel_llrs: variance <= 0");
    std::vector<double> llr(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) llr[i] = 2.0 * y[i] / noise_variance;
    return llr;
}

BitVec sc_decode(const CodeSpec& code, std::span<const double> llr, const ScOptions& opts) {
    if (llr.size() != static_cast<std::size_t>(code.N))
        throw std::invalid_argument("sc_decode: LLR length mismatch");
    BitVec u_hat(static_cast<std::size_t>(code.N));
    std::vector<double> channel(llr.begin(), llr.end());
    sc_rec(channel, 0, code, u_hat, opts.min_sum);
    return extract_message(code, u_hat);
}

BitVec scl_decode(const CodeSpec& code, std::span<const double> llr, int list_size,
                  const ScOptions& opts) {
    if (llr.size() != static_cast<std::size_t>(code.N))
        throw std::invalid_argument("scl_decode: LLR length mismatch");
    if (list_size < 1 || (list_size & (list_size - 1)) != 0)
        throw std::invalid_argument("scl_decode: list size must be a power of two");

    const int n = code.n;
    const int N = code.N;
    const std::vector<double> channel(llr.begin(), llr.end());

    Path seed;
    seed.l.resize(static_cast<std::size_t>(n) + 1);
    seed.pend.resize(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n; ++s) {
        seed.l[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(N >> s), 0.0);
        seed.pend[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(N >> s), 0);
    }
    seed.u_hat = BitVec(static_cast<std::size_t>(N));
    std::vector<Path> paths{std::move(seed)};

    auto stage_in = [&](const Path& p, int s) -> const std::vector<double>& {
        return s == 1 ? channel : p.l[static_cast<std::size_t>(s - 1)];
    };

    auto compute_llrs = [&](Path& p, int phi) {
        int first;
        if (phi == 0) {
            first = 1;
        } else {
            const int sg = n - std::countr_zero(static_cast<unsigned>(phi));
            const int len = N >> sg;
            const auto& in = stage_in(p, sg);
            auto& out = p.l[static_cast<std::size_t>(sg)];
            const auto& ps = p.pend[static_cast<std::size_t>(sg)];
            for (int j = 0; j < len; ++j)
                out[static_cast<std::size_t>(j)] =
                    g_combine(in[static_cast<std::size_t>(j)],
                              in[static_cast<std::size_t>(j + len)],
                              ps[static_cast<std::size_t>(j)]);
            first = sg + 1;
        }
        for (int s = first; s <= n; ++s) {
            const int len = N >> s;
            const auto& in = stage_in(p, s);
            auto& out = p.l[static_cast<std::size_t>(s)];
            for (int j = 0; j < len; ++j)
                out[static_cast<std::size_t>(j)] =
                    f_combine(in[static_cast<std::size_t>(j)],
                              in[static_cast<std::size_t>(j + len)], opts.min_sum);
        }
    };

    auto store_decision = [&](Path& p, int phi, std::uint8_t bit) {
        p.u_hat.set(static_cast<std::size_t>(phi), bit);
        std::vector<std::uint8_t> cur{bit};
        int s = n;
        // Completed right children merge with their pended left siblings.
        while (s > 0 && ((phi >> (n - s)) & 1)) {
            const int len = N >> s;
            std::vector<std::uint8_t> parent(static_cast<std::size_t>(2 * len));
            const auto& left = p.pend[static_cast<std::size_t>(s)];
            for (int j = 0; j < len; ++j) {
                parent[static_cast<std::size_t>(j)] = left[static_cast<std::size_t>(j)] ^
                                                      cur[static_cast<std::size_t>(j)];
                parent[static_cast<std::size_t>(j + len)] = cur[static_cast<std::size_t>(j)];
            }
            cur = std::move(parent);
            --s;
        }
        if (s > 0) p.pend[static_cast<std::size_t>(s)] = std::move(cur);
    };

    for (int phi = 0; phi < N; ++phi) {
        for (Path& p : paths) compute_llrs(p, phi);

        if (!code.is_info(phi)) {
            for (Path& p : paths) {
                p.pm += penalty(p.l[static_cast<std::size_t>(n)][0], opts.min_sum);
                store_decision(p, phi, 0);
            }
            continue;
        }

        std::vector<Candidate> cands;
        cands.reserve(paths.size() * 2);
        for (int ip = 0; ip < static_cast<int>(paths.size()); ++ip) {
            const double L = paths[static_cast<std::size_t>(ip)].l[static_cast<std::size_t>(n)][0];
            cands.push_back({paths[static_cast<std::size_t>(ip)].pm + penalty(L, opts.min_sum),
                             ip, 0});
            cands.push_back({paths[static_cast<std::size_t>(ip)].pm + penalty(-L, opts.min_sum),
                             ip, 1});
        }
        // Stable sort keeps the (path, bit=0) candidate ahead on metric ties,
        // which makes SCL(1) reproduce SC decisions exactly.
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.pm < b.pm; });
        const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(list_size),
                                                       cands.size());
        cands.resize(keep);

        std::vector<int> uses(paths.size(), 0);
        for (const Candidate& c : cands) uses[static_cast<std::size_t>(c.path)]++;

        std::vector<Path> next;
        next.reserve(keep);
        for (const Candidate& c : cands) {
            Path& src = paths[static_cast<std::size_t>(c.path)];
            Path p = (--uses[static_cast<std::size_t>(c.path)] == 0) ? std::move(src) : src;
            p.pm = c.pm;
            store_decision(p, phi, c.bit);
            next.push_back(std::move(p));
        }
        paths = std::move(next);
    }

    const Path* best = &paths.front();
    for (const Path& p : paths)
        if (p.pm < best->pm) best = &p;
    return extract_message(code, best->u_hat);
}

}  // namespace srpac
