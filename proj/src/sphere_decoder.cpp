#include "srpac/sphere_decoder.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace srpac {

std::vector<double> lower_bounds(std::span<const double> y) {
    std::vector<double> lb(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        lb[i] = std::min(branch_metric(y[i], 0), branch_metric(y[i], 1));
    return lb;
}

namespace {

struct Frame {
    double pm_entry = 0.0;   // metric accumulated at levels above this one
    double metric[2] = {0.0, 0.0};
    double pm_child = 0.0;   // metric including the currently applied bit
    std::uint8_t cand[2] = {0, 0};
    std::uint8_t count = 0;
    std::uint8_t cur = 0;
    std::uint8_t applied = 0;
    std::uint8_t applied_bit = 0;
};

// Depth-first descent from level N-1 to 0. The per-column parity of all
// decided one-bits is kept incrementally in `acc`, so the branch metric at
// level l only needs acc bit l. Sink supplies the pruning threshold and
// consumes completed leaves.
template <typename Sink>
void depth_first_search(const EffectiveGenerator& gen, const CodeSpec& code,
                        std::span<const double> y, const SphereOptions& opts, Sink& sink,
                        std::uint64_t& nodes, std::uint64_t& leaves) {
    const int N = code.N;

    // Prefix sums of the per-position lower bound: lpre[l] = sum_{i<l} lambda_i.
    std::vector<double> lpre(static_cast<std::size_t>(N) + 1, 0.0);
    if (opts.use_lower_bound) {
        const std::vector<double> lb = lower_bounds(y);
        for (int l = 1; l <= N; ++l)
            lpre[static_cast<std::size_t>(l)] =
                lpre[static_cast<std::size_t>(l - 1)] + lb[static_cast<std::size_t>(l - 1)];
    }

    std::vector<Frame> frames(static_cast<std::size_t>(N));
    std::vector<std::uint8_t> vbits(static_cast<std::size_t>(N), 0);
    BitVec acc(static_cast<std::size_t>(N));

    auto open_frame = [&](int l, double pm_entry) {
        Frame& f = frames[static_cast<std::size_t>(l)];
        const int x0 = acc.get(static_cast<std::size_t>(l)) ? 1 : 0;
        f.metric[0] = branch_metric(y[static_cast<std::size_t>(l)], x0);
        f.metric[1] = branch_metric(y[static_cast<std::size_t>(l)], x0 ^ 1);
        f.pm_entry = pm_entry;
        f.cur = 0;
        f.applied = 0;
        if (!code.is_info(l)) {  // frozen: the path never splits
            f.cand[0] = 0;
            f.count = 1;
        } else if (f.metric[0] <= f.metric[1]) {  // best branch first
            f.cand[0] = 0;
            f.cand[1] = 1;
            f.count = 2;
        } else {
            f.cand[0] = 1;
            f.cand[1] = 0;
            f.count = 2;
        }
    };

    int l = N - 1;
    open_frame(l, 0.0);
    while (true) {
        Frame& f = frames[static_cast<std::size_t>(l)];
        if (f.applied) {
            if (f.applied_bit) acc ^= gen.matrix.row(static_cast<std::size_t>(l));
            f.applied = 0;
        }
        bool descended = false;
        while (f.cur < f.count) {
            const std::uint8_t b = f.cand[f.cur++];
            const double cpm = f.pm_entry + f.metric[b];
            // Strictly-greater comparison keeps leaves exactly on the sphere.
            if (cpm + lpre[static_cast<std::size_t>(l)] > sink.threshold()) continue;
            ++nodes;
            vbits[static_cast<std::size_t>(l)] = b;
            if (l == 0) {
                ++leaves;
                sink.on_leaf(cpm, vbits);
                continue;
            }
            if (b) acc ^= gen.matrix.row(static_cast<std::size_t>(l));
            f.applied = 1;
            f.applied_bit = b;
            f.pm_child = cpm;
            descended = true;
            break;
        }
        if (descended) {
            --l;
            open_frame(l, frames[static_cast<std::size_t>(l) + 1].pm_child);
            continue;
        }
        if (l == N - 1) break;
        ++l;
    }
}

void check_inputs(const EffectiveGenerator& gen, const CodeSpec& code,
                  std::span<const double> y) {
    if (!gen.triangular)
        throw std::invalid_argument(
            "sphere decoding requires a lower-triangular generator (not forward precoding)");
    if (gen.matrix.rows() != static_cast<std::size_t>(code.N) ||
        gen.matrix.cols() != static_cast<std::size_t>(code.N))
        throw std::invalid_argument("sphere decoding: generator size mismatch");
    if (y.size() != static_cast<std::size_t>(code.N))
        throw std::invalid_argument("sphere decoding: received vector length mismatch");
}

DecodeOutcome make_outcome(const CodeSpec& code, const std::vector<std::uint8_t>& vbits,
                           double sed) {
    DecodeOutcome out;
    out.v_hat = BitVec(static_cast<std::size_t>(code.N));
    for (int i = 0; i < code.N; ++i)
        if (vbits[static_cast<std::size_t>(i)]) out.v_hat.set(static_cast<std::size_t>(i), true);
    out.message_hat = extract_message(code, out.v_hat);
    out.sed = sed;
    return out;
}

}  // namespace

DecodeOutcome sphere_decode(const EffectiveGenerator& gen, const CodeSpec& code,
                            std::span<const double> y, const SphereOptions& opts) {
    check_inputs(gen, code, y);

    struct BestSink {
        double r2 = std::numeric_limits<double>::infinity();
        std::vector<std::uint8_t> best;
        double threshold() const { return r2; }
        void on_leaf(double pm, const std::vector<std::uint8_t>& vbits) {
            if (pm < r2) {  // radius shrinks to every improving leaf
                r2 = pm;
                best = vbits;
            }
        }
    } sink;

    std::uint64_t nodes = 0, leaves = 0;
    depth_first_search(gen, code, y, opts, sink, nodes, leaves);

    DecodeOutcome out = make_outcome(code, sink.best, sink.r2);
    out.nodes_visited = nodes;
    out.leaves_found = leaves;
    return out;
}

std::vector<DecodeOutcome> list_sphere_decode(const EffectiveGenerator& gen,
                                              const CodeSpec& code, std::span<const double> y,
                                              int list_size, const SphereOptions& opts) {
    check_inputs(gen, code, y);
    if (list_size < 1) throw std::invalid_argument("list_sphere_decode: list size must be >= 1");

    struct Entry {
        double sed;
        std::uint64_t seq;
        std::vector<std::uint8_t> v;
    };
    struct ByMetric {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.sed != b.sed) return a.sed < b.sed;
            return a.seq < b.seq;  // evict the newest among equal metrics
        }
    };

    struct ListSink {
        std::size_t capacity;
        std::priority_queue<Entry, std::vector<Entry>, ByMetric> pool;
        std::uint64_t seq = 0;

        double threshold() const {
            return pool.size() < capacity ? std::numeric_limits<double>::infinity()
                                          : pool.top().sed;
        }
        void on_leaf(double pm, const std::vector<std::uint8_t>& vbits) {
            if (pool.size() < capacity) {
                pool.push(Entry{pm, seq++, vbits});
            } else if (pm < pool.top().sed) {
                pool.pop();
                pool.push(Entry{pm, seq++, vbits});
            }
        }
    } sink{static_cast<std::size_t>(list_size), {}, 0};

    std::uint64_t nodes = 0, leaves = 0;
    depth_first_search(gen, code, y, opts, sink, nodes, leaves);

    std::vector<Entry> entries;
    entries.reserve(sink.pool.size());
    while (!sink.pool.empty()) {
        entries.push_back(sink.pool.top());
        sink.pool.pop();
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.sed != b.sed) return a.sed < b.sed;
        return a.seq < b.seq;
    });

    std::vector<DecodeOutcome> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) {
        DecodeOutcome o = make_outcome(code, e.v, e.sed);
        o.nodes_visited = nodes;
        o.leaves_found = leaves;
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace srpac
