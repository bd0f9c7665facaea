#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "srpac/polar.hpp"
#include "srpac/rng.hpp"

using namespace srpac;

TEST_CASE("polar transform small cases") {
    const BitMatrix g1 = polar_transform(1);
    CHECK(g1.rows() == 2);
    CHECK(g1.get(0, 0));
    CHECK_FALSE(g1.get(0, 1));
    CHECK(g1.get(1, 0));
    CHECK(g1.get(1, 1));

    // n=2 expanded by hand: rows 1000, 1100, 1010, 1111
    const BitMatrix g2 = polar_transform(2);
    CHECK(g2.row(0).to_string01() == "1000");
    CHECK(g2.row(1).to_string01() == "1100");
    CHECK(g2.row(2).to_string01() == "1010");
    CHECK(g2.row(3).to_string01() == "1111");

    CHECK(polar_transform(3).row(5).to_string01() == "11001100");

    CHECK_THROWS_AS(polar_transform(0), std::invalid_argument);
    CHECK_THROWS_AS(polar_transform(17), std::invalid_argument);
}

TEST_CASE("polar transform equals the Kronecker oracle up to n=8") {
    for (int n = 1; n <= 8; ++n)
        CHECK(oracle::equals(oracle::kronecker_polar_transform(n), polar_transform(n)));
}

TEST_CASE("involution, triangularity and the row-weight closed form, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        const BitMatrix g = polar_transform(n);
        CHECK(g.is_unit_lower_triangular());
        CHECK(g * g == BitMatrix::identity(g.rows()));
        for (int i = 0; i < (1 << n); ++i)
            CHECK(g.row(static_cast<std::size_t>(i)).popcount() == row_weight(n, i));
    }
}

TEST_CASE("row_weight examples and range checks") {
    CHECK(row_weight(3, 0) == 1);
    CHECK(row_weight(3, 7) == 8);
    CHECK(row_weight(6, 27) == 16);  // coset-leader weight used by the census tables
    CHECK_THROWS_AS(row_weight(3, 8), std::out_of_range);
    CHECK_THROWS_AS(row_weight(3, -1), std::out_of_range);
}

TEST_CASE("min_distance over the information set") {
    CHECK(min_distance(CodeSpec::from_info_set(3, {3, 5, 6, 7})) == 4);
    CHECK(min_distance(CodeSpec::from_info_set(2, {0, 1, 2, 3})) == 1);
}

TEST_CASE("CodeSpec validation") {
    CHECK_THROWS_AS(CodeSpec::from_info_set(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::from_info_set(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::from_info_set(3, {8}), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::from_info_set(3, {-1}), std::invalid_argument);
    const CodeSpec spec = CodeSpec::from_info_set(3, {6, 3, 7, 5});
    CHECK(spec.info_set == std::vector<int>{3, 5, 6, 7});
    CHECK(spec.frozen_set() == std::vector<int>{0, 1, 2, 4});
    CHECK(spec.K == 4);
    CHECK(spec.rate() == doctest::Approx(0.5));
}

TEST_CASE("Bhattacharyya construction recovers the (8,4) example set") {
    const CodeSpec spec = bhattacharyya_info_set(3, 4, 0.0);
    CHECK(spec.info_set == std::vector<int>{3, 5, 6, 7});
    CHECK(bhattacharyya_info_set(3, 8, 0.0).info_set ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(bhattacharyya_info_set(3, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bhattacharyya_info_set(3, 9, 0.0), std::invalid_argument);
}

TEST_CASE("explicit info-set files") {
    const std::string path = "test_info_set.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n3, 5\n6\n7  # trailing comment\n";
    }
    const CodeSpec spec = info_set_from_file(3, 4, path);
    CHECK(spec.info_set == std::vector<int>{3, 5, 6, 7});
    CHECK_THROWS_AS(info_set_from_file(3, 5, path), std::invalid_argument);
    {
        std::ofstream out(path);
        out << "3 5 6 6\n";
    }
    CHECK_THROWS_AS(info_set_from_file(3, 4, path), std::invalid_argument);
    {
        std::ofstream out(path);
        out << "3 five 6 7\n";
    }
    CHECK_THROWS_AS(info_set_from_file(3, 4, path), std::invalid_argument);
    CHECK_THROWS_AS(info_set_from_file(3, 4, "no_such_file.txt"), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("polar encoding matches Example-1 vectors") {
    CHECK(polar_encode(BitVec(8)) == BitVec(8));
    CHECK(polar_encode(BitVec::from_string01("11100100")).to_string01() == "00101100");
    CHECK(polar_encode(BitVec::from_string01("00000100")).to_string01() == "11001100");
}

TEST_CASE("butterfly encoding equals the matrix route and is linear") {
    SplitMix64 rng(11);
    for (int n = 1; n <= 8; ++n) {
        const BitMatrix g = polar_transform(n);
        const std::size_t N = std::size_t(1) << n;
        for (int trial = 0; trial < 25; ++trial) {
            BitVec u(N), u2(N);
            for (std::size_t i = 0; i < N; ++i) {
                u.set(i, rng.next_bit());
                u2.set(i, rng.next_bit());
            }
            CHECK(polar_encode(u) == g.mul_left(u));
            BitVec both = u;
            both ^= u2;
            BitVec xor_enc = polar_encode(u);
            xor_enc ^= polar_encode(u2);
            CHECK(polar_encode(both) == xor_enc);
        }
    }
    CHECK_THROWS_AS(polar_encode(BitVec(12)), std::invalid_argument);
}
