#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "srpac/bits.hpp"

namespace srpac {

// Largest supported log2 block length. The polar transform is materialized as
// a dense N x N bit matrix, so this is a memory ceiling, not an algorithmic one.
inline constexpr int kMaxLogBlockLength = 16;

// Block length, dimension and the information/frozen split. Immutable after
// construction; everything downstream consumes it by const reference.
struct CodeSpec {
    int n = 0;  // log2 block length
    int N = 0;  // block length, 2^n
    int K = 0;  // dimension
    std::vector<int> info_set;  // sorted ascending, K distinct indices in [0, N)
    BitVec info_mask;           // N bits, set exactly on info_set

    static CodeSpec from_info_set(int n, std::vector<int> info);

    bool is_info(int i) const { return info_mask.get(static_cast<std::size_t>(i)); }
    std::vector<int> frozen_set() const;
    double rate() const { return static_cast<double>(K) / N; }
};

// G_N = G_2^{(x)n} with G_2 = [[1,0],[1,1]]; entry (i,j) is 1 iff the binary
// support of j is contained in that of i. Unit lower triangular, self-inverse.
BitMatrix polar_transform(int n, int max_n = kMaxLogBlockLength);

// Hamming weight of row i of polar_transform(n): 2^popcount(i).
std::uint64_t row_weight(int n, int i);

// Minimum row weight over the information set; equals the code's minimum
// distance for polar codes.
std::uint64_t min_distance(const CodeSpec& spec);

// Bhattacharyya-parameter construction for a BI-AWGN channel at the given
// design Eb/N0. The recursion runs in the log domain so deep plus-branches do
// not underflow. Ties are broken toward the larger index.
CodeSpec bhattacharyya_info_set(int n, int K, double design_snr_db);

// Decimal indices separated by commas, whitespace or newlines; '#' starts a
// comment that runs to end of line.
std::vector<int> parse_index_list(std::istream& in);

// Reads an explicit information set. If expected_K >= 0 the file must contain
// exactly that many indices, otherwise K is inferred from the file.
CodeSpec info_set_from_file(int n, int expected_K, const std::string& path);

void write_index_list(std::ostream& out, const std::vector<int>& indices);

// x = u * G_N in place via the butterfly network; u.size() must be a power of
// two. O(N log N) word operations.
void polar_encode_inplace(BitVec& u);

inline BitVec polar_encode(BitVec u) {
    polar_encode_inplace(u);
    return u;
}

}  // namespace srpac
