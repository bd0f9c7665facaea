#pragma once

#include <string>
#include <vector>

#include "srpac/bits.hpp"
#include "srpac/polar.hpp"

namespace srpac {

enum class PrecodeMode { none, forward, reverse, selective_reverse };

std::string to_string(PrecodeMode mode);
PrecodeMode precode_mode_from_string(const std::string& s);

// Convolution polynomial p = [p_0, ..., p_m] plus the precoding direction.
struct PrecodeSpec {
    std::vector<std::uint8_t> poly{1};  // p_0 = p_m = 1 by convention
    PrecodeMode mode = PrecodeMode::none;

    int m() const { return static_cast<int>(poly.size()) - 1; }
    int constraint_length() const { return static_cast<int>(poly.size()); }

    // Bit string in the paper's vector order, e.g. "1101" for p = [1 1 0 1].
    static PrecodeSpec parse(const std::string& poly_bits, PrecodeMode mode);

    void validate(int N) const;
};

// Human-readable scheme name: polar, pac(4), r-pac(7), sr-pac(10), ...
std::string scheme_label(const PrecodeSpec& spec);

// Upper-triangular Toeplitz matrix of the forward convolution: row r holds
// p at columns r..r+m, truncated at the matrix edge.
BitMatrix build_p_forward(const PrecodeSpec& spec, int N);

// Transpose of the forward matrix; column i holds p at rows i..i+m.
BitMatrix build_p_reverse(const PrecodeSpec& spec, int N);

// Reverse matrix with column i replaced by the unit column wherever
// row_weight(n, i) < min_distance(code).
BitMatrix build_p_selective(const PrecodeSpec& spec, const CodeSpec& code);

// Dispatch on mode; identity for mode none.
BitMatrix build_p(const PrecodeSpec& spec, const CodeSpec& code);

struct EffectiveGenerator {
    BitMatrix matrix;        // M * G_N
    bool triangular = true;  // false exactly for forward precoding
};

EffectiveGenerator effective_generator(const PrecodeSpec& spec, const CodeSpec& code);

// u = v * M computed as a direct convolution. Frozen positions of v must be
// zero; index overruns at either edge contribute zero.
BitVec precode_input(const PrecodeSpec& spec, const CodeSpec& code, const BitVec& v);

// Message bits placed at the information positions in ascending index order.
BitVec scatter_message(const CodeSpec& code, const BitVec& message);
BitVec extract_message(const CodeSpec& code, const BitVec& v);

// Full pipeline: scatter, precode, polar transform.
BitVec encode(const PrecodeSpec& spec, const CodeSpec& code, const BitVec& message);

}  // namespace srpac
