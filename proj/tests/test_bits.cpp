#include "doctest.h"

#include "oracles.hpp"
#include "srpac/bits.hpp"
#include "srpac/rng.hpp"

using srpac::BitMatrix;
using srpac::BitVec;

TEST_CASE("BitVec basics across word boundaries") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK_FALSE(v.any());
    CHECK(v.first_set() == 130);

    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 4);
    CHECK(v.first_set() == 0);
    CHECK(v.get(63));
    CHECK(v.get(64));
    v.flip(0);
    CHECK_FALSE(v.get(0));
    CHECK(v.first_set() == 63);

    BitVec w(130);
    w.set(63, true);
    v ^= w;
    CHECK(v.first_set() == 64);
    CHECK(v.popcount() == 2);
}

TEST_CASE("BitVec string round trip") {
    const std::string s = "0110010111010001";
    BitVec v = BitVec::from_string01(s);
    CHECK(v.to_string01() == s);
    CHECK_THROWS_AS(BitVec::from_string01("01x1"), std::invalid_argument);
}

TEST_CASE("for_each_set_bit visits ascending") {
    BitVec v(200);
    for (std::size_t i : {3u, 64u, 65u, 199u}) v.set(i, true);
    std::vector<std::size_t> seen;
    srpac::for_each_set_bit(v, [&](std::size_t i) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{3, 64, 65, 199});
}

TEST_CASE("BitMatrix multiply and transpose match the dense oracle") {
    srpac::SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 70;
        BitMatrix a(n, n), b(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                a.set(r, c, rng.next_bit());
                b.set(r, c, rng.next_bit());
            }
        CHECK(oracle::equals(oracle::multiply(oracle::to_dense(a), oracle::to_dense(b)), a * b));
        CHECK(oracle::equals(oracle::transpose(oracle::to_dense(a)), a.transposed()));

        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, rng.next_bit());
        const BitVec got = a.mul_left(v);
        std::vector<std::uint8_t> vd(n);
        for (std::size_t i = 0; i < n; ++i) vd[i] = v.get(i);
        const auto want = oracle::mul_left(vd, oracle::to_dense(a));
        for (std::size_t i = 0; i < n; ++i) CHECK(got.get(i) == (want[i] != 0));
    }
}

TEST_CASE("identity and triangularity checks") {
    const BitMatrix eye = BitMatrix::identity(9);
    CHECK(eye.is_unit_lower_triangular());
    BitMatrix m = eye;
    m.set(2, 5, true);
    CHECK_FALSE(m.is_unit_lower_triangular());
    m.set(2, 5, false);
    m.set(5, 2, true);
    CHECK(m.is_unit_lower_triangular());
}
