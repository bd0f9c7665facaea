#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace srpac {

// Bit-packed vector over F2. Bit i lives in word i/64 at position i%64.
// Unused tail bits of the last word are kept zero so whole-word operations
// (xor, popcount, comparison) need no masking.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    // Index of the lowest set bit, or size() if the vector is all-zero.
    std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return 64 * k + std::countr_zero(w_[k]);
        return nbits_;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    void clear() { std::fill(w_.begin(), w_.end(), std::uint64_t(0)); }

    std::vector<std::uint64_t>& words() { return w_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

    bool operator==(const BitVec&) const = default;

    std::string to_string01() const;
    static BitVec from_string01(const std::string& s);

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense row-major matrix over F2.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return r_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { r_[r].set(c, v); }

    BitVec& row(std::size_t r) { return r_[r]; }
    const BitVec& row(std::size_t r) const { return r_[r]; }

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& rhs) const;

    // Row vector times matrix: result_c = sum_r v_r * M_{r,c}.
    BitVec mul_left(const BitVec& v) const;

    bool is_unit_lower_triangular() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

// Calls fn(index) for every set bit of v, in ascending order.
template <typename Fn>
void for_each_set_bit(const BitVec& v, Fn&& fn) {
    const auto& w = v.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::uint64_t x = w[k];
        while (x) {
            fn(64 * k + std::countr_zero(x));
            x &= x - 1;
        }
    }
}

}  // namespace srpac
