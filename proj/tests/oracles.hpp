#pragma once

// Test-only reference implementations, kept deliberately naive and separate
// from the library code paths they are used to check.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "srpac/bits.hpp"
#include "srpac/polar.hpp"
#include "srpac/precode.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::uint8_t>>;  // row major over F2

Dense to_dense(const srpac::BitMatrix& m);
bool equals(const Dense& a, const srpac::BitMatrix& b);

// G_2^{(x)n} grown one Kronecker factor at a time.
Dense kronecker_polar_transform(int n);

Dense transpose(const Dense& a);
Dense multiply(const Dense& a, const Dense& b);
std::vector<std::uint8_t> mul_left(const std::vector<std::uint8_t>& v, const Dense& m);

// Every codeword of the code spanned by rows {info_set} of `gen`, indexed by
// message value; message bit k drives row info_set[k].
std::vector<srpac::BitVec> full_codebook(const srpac::BitMatrix& gen,
                                         const srpac::CodeSpec& code);

double sed(std::span<const double> y, const srpac::BitVec& codeword);

// Exhaustive ML decode: minimum squared Euclidean distance over the codebook.
double brute_force_min_sed(std::span<const double> y,
                           const std::vector<srpac::BitVec>& codebook);

// Basis of the dual code (null space of the K x N generator), by Gaussian
// elimination over F2 on a dense copy.
std::vector<srpac::BitVec> dual_basis(const srpac::BitMatrix& gen,
                                      const srpac::CodeSpec& code);

// Weight distribution B_s of the span of `basis` (2^dim enumeration).
std::vector<std::uint64_t> span_weight_distribution(const std::vector<srpac::BitVec>& basis,
                                                    int length);

// Krawtchouk polynomial K_w(s; N).
__int128 krawtchouk(int w, int s, int N);

// A_w of the primal code from the dual weight distribution via the
// MacWilliams identity. Exact integer arithmetic.
std::uint64_t macwilliams_aw(const std::vector<std::uint64_t>& dual_weights, int N, int dual_dim,
                             int w);

// Convenience: A_w of the code generated by the given precoding over `code`.
std::uint64_t codeword_count_of_weight(const srpac::PrecodeSpec& precode,
                                       const srpac::CodeSpec& code, int w);

// Smallest w >= 1 with A_w > 0, via MacWilliams over the dual.
std::uint64_t dual_min_distance(const srpac::PrecodeSpec& precode, const srpac::CodeSpec& code);

// Q(x) by numeric quadrature of the normal density, independent of erfc.
double q_by_quadrature(double x);

}  // namespace oracle
