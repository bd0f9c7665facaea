#include "srpac/bits.hpp"

#include <stdexcept>

namespace srpac {

std::string BitVec::to_string01() const {
    std::string s(nbits_, '0');
    for (std::size_t i = 0; i < nbits_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::from_string01(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for_each_set_bit(r_[r], [&](std::size_t c) { t.set(c, r, true); });
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("BitMatrix multiply: shape mismatch");
    BitMatrix out(rows_, rhs.cols());
    for (std::size_t r = 0; r < rows_; ++r)
        for_each_set_bit(r_[r], [&](std::size_t j) { out.row(r) ^= rhs.row(j); });
    return out;
}

BitVec BitMatrix::mul_left(const BitVec& v) const {
    if (v.size() != rows_) throw std::invalid_argument("BitMatrix mul_left: length mismatch");
    BitVec out(cols_);
    for_each_set_bit(v, [&](std::size_t r) { out ^= r_[r]; });
    return out;
}

bool BitMatrix::is_unit_lower_triangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!r_[r].get(r)) return false;
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (r_[r].get(c)) return false;
    }
    return true;
}

}  // namespace srpac
