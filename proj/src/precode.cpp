#include "srpac/precode.hpp"

#include <stdexcept>

namespace srpac {

std::string to_string(PrecodeMode mode) {
    switch (mode) {
        case PrecodeMode::none: return "none";
        case PrecodeMode::forward: return "forward";
        case PrecodeMode::reverse: return "reverse";
        case PrecodeMode::selective_reverse: return "selective-reverse";
    }
    return "?";
}

PrecodeMode precode_mode_from_string(const std::string& s) {
    if (s == "none" || s == "polar") return PrecodeMode::none;
    if (s == "forward" || s == "pac") return PrecodeMode::forward;
    if (s == "reverse" || s == "rpac" || s == "r-pac") return PrecodeMode::reverse;
    if (s == "selective-reverse" || s == "selective_reverse" || s == "srpac" || s == "sr-pac")
        return PrecodeMode::selective_reverse;
    throw std::invalid_argument("unknown precode mode: '" + s + "'");
}

PrecodeSpec PrecodeSpec::parse(const std::string& poly_bits, PrecodeMode mode) {
    if (poly_bits.empty()) throw std::invalid_argument("empty polynomial");
    PrecodeSpec spec;
    spec.mode = mode;
    spec.poly.clear();
    for (char c : poly_bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("polynomial must be a bit string, got '" + poly_bits + "'");
        spec.poly.push_back(c == '1');
    }
    if (spec.poly.front() != 1 || spec.poly.back() != 1)
        throw std::invalid_argument("polynomial requires p_0 = p_m = 1");
    return spec;
}

void PrecodeSpec::validate(int N) const {
    if (poly.empty() || poly.front() != 1 || poly.back() != 1)
        throw std::invalid_argument("polynomial requires p_0 = p_m = 1");
    if (constraint_length() > N)
        throw std::invalid_argument("constraint length m+1 exceeds block length");
}

std::string scheme_label(const PrecodeSpec& spec) {
    const std::string cl = "(" + std::to_string(spec.constraint_length()) + ")";
    switch (spec.mode) {
        case PrecodeMode::none: return "polar";
        case PrecodeMode::forward: return "pac" + cl;
        case PrecodeMode::reverse: return "r-pac" + cl;
        case PrecodeMode::selective_reverse: return "sr-pac" + cl;
    }
    return "?";
}

BitMatrix build_p_forward(const PrecodeSpec& spec, int N) {
    if (spec.mode != PrecodeMode::forward)
        throw std::invalid_argument("build_p_forward: mode must be forward");
    spec.validate(N);
    BitMatrix p(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    for (int r = 0; r < N; ++r)
        for (int j = 0; j <= spec.m() && r + j < N; ++j)
            if (spec.poly[static_cast<std::size_t>(j)]) p.set(r, r + j, true);
    return p;
}

BitMatrix build_p_reverse(const PrecodeSpec& spec, int N) {
    if (spec.mode != PrecodeMode::reverse)
        throw std::invalid_argument("build_p_reverse: mode must be reverse");
    spec.validate(N);
    BitMatrix p(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    for (int c = 0; c < N; ++c)
        for (int j = 0; j <= spec.m() && c + j < N; ++j)
            if (spec.poly[static_cast<std::size_t>(j)]) p.set(c + j, c, true);
    return p;
}

BitMatrix build_p_selective(const PrecodeSpec& spec, const CodeSpec& code) {
    if (spec.mode != PrecodeMode::selective_reverse)
        throw std::invalid_argument("build_p_selective: mode must be selective-reverse");
    spec.validate(code.N);
    PrecodeSpec rev = spec;
    rev.mode = PrecodeMode::reverse;
    BitMatrix p = build_p_reverse(rev, code.N);
    const std::uint64_t wmin = min_distance(code);
    for (int i = 0; i < code.N; ++i) {
        if (row_weight(code.n, i) >= wmin) continue;
        // u_i = v_i for low-weight rows: clear column i, restore the diagonal.
        for (int r = i; r < code.N && r <= i + spec.m(); ++r) p.set(r, i, false);
        p.set(i, i, true);
    }
    return p;
}

BitMatrix build_p(const PrecodeSpec& spec, const CodeSpec& code) {
    switch (spec.mode) {
        case PrecodeMode::none:
            return BitMatrix::identity(static_cast<std::size_t>(code.N));
        case PrecodeMode::forward: return build_p_forward(spec, code.N);
        case PrecodeMode::reverse: return build_p_reverse(spec, code.N);
        case PrecodeMode::selective_reverse: return build_p_selective(spec, code);
    }
    throw std::logic_error("build_p: bad mode");
}

EffectiveGenerator effective_generator(const PrecodeSpec& spec, const CodeSpec& code) {
    EffectiveGenerator gen;
    gen.matrix = build_p(spec, code) * polar_transform(code.n);
    gen.triangular = spec.mode != PrecodeMode::forward;
    return gen;
}

BitVec precode_input(const PrecodeSpec& spec, const CodeSpec& code, const BitVec& v) {
    if (static_cast<int>(v.size()) != code.N)
        throw std::invalid_argument("precode_input: length mismatch");
    spec.validate(code.N);
    for (int i = 0; i < code.N; ++i)
        if (!code.is_info(i) && v.get(static_cast<std::size_t>(i)))
            throw std::invalid_argument("precode_input: nonzero frozen position " +
                                        std::to_string(i));

    const int N = code.N;
    const int m = spec.m();
    BitVec u(static_cast<std::size_t>(N));
    const std::uint64_t wmin =
        spec.mode == PrecodeMode::selective_reverse ? min_distance(code) : 0;
    for (int i = 0; i < N; ++i) {
        bool bit = false;
        switch (spec.mode) {
            case PrecodeMode::none: bit = v.get(static_cast<std::size_t>(i)); break;
            case PrecodeMode::forward:
                for (int j = 0; j <= m && j <= i; ++j)
                    if (spec.poly[static_cast<std::size_t>(j)])
                        bit ^= v.get(static_cast<std::size_t>(i - j));
                break;
            case PrecodeMode::reverse:
                for (int j = 0; j <= m && i + j < N; ++j)
                    if (spec.poly[static_cast<std::size_t>(j)])
                        bit ^= v.get(static_cast<std::size_t>(i + j));
                break;
            case PrecodeMode::selective_reverse:
                if (row_weight(code.n, i) >= wmin) {
                    for (int j = 0; j <= m && i + j < N; ++j)
                        if (spec.poly[static_cast<std::size_t>(j)])
                            bit ^= v.get(static_cast<std::size_t>(i + j));
                } else {
                    bit = v.get(static_cast<std::size_t>(i));
                }
                break;
        }
        if (bit) u.set(static_cast<std::size_t>(i), true);
    }
    return u;
}

BitVec scatter_message(const CodeSpec& code, const BitVec& message) {
    if (static_cast<int>(message.size()) != code.K)
        throw std::invalid_argument("scatter_message: message length != K");
    BitVec v(static_cast<std::size_t>(code.N));
    for (int k = 0; k < code.K; ++k)
        if (message.get(static_cast<std::size_t>(k)))
            v.set(static_cast<std::size_t>(code.info_set[static_cast<std::size_t>(k)]), true);
    return v;
}

BitVec extract_message(const CodeSpec& code, const BitVec& v) {
    if (static_cast<int>(v.size()) != code.N)
        throw std::invalid_argument("extract_message: length mismatch");
    BitVec msg(static_cast<std::size_t>(code.K));
    for (int k = 0; k < code.K; ++k)
        if (v.get(static_cast<std::size_t>(code.info_set[static_cast<std::size_t>(k)])))
            msg.set(static_cast<std::size_t>(k), true);
    return msg;
}

BitVec encode(const PrecodeSpec& spec, const CodeSpec& code, const BitVec& message) {
    BitVec u = precode_input(spec, code, scatter_message(code, message));
    polar_encode_inplace(u);
    return u;
}

}  // namespace srpac
