#include "doctest.h"

#include "qcohom/int_matrix.hpp"

#include <random>

using namespace qcohom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_snf_contract(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.D);
    CHECK(snf.U * snf.Uinv == IntMatrix::identity(m.rows()));
    CHECK(snf.V * snf.Vinv == IntMatrix::identity(m.cols()));
    Int du = determinant(snf.U);
    Int dv = determinant(snf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    std::vector<Int> d = snf.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i] != 0) {
            CHECK(d[i + 1] % d[i] == 0);
        } else {
            CHECK(d[i + 1] == 0);
        }
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(snf.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("snf of a matrix already in normal form") {
    IntMatrix m = IntMatrix::diagonal({Int(2), Int(0)});
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.D == m);
    CHECK(snf.U * m * snf.V == snf.D);
}

TEST_CASE("snf of [[2,4],[4,8]]") {
    IntMatrix m(2, 2, {Int(2), Int(4), Int(4), Int(8)});
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.D.at(0, 0) == 2);
    CHECK(snf.D.at(1, 1) == 0);
    check_snf_contract(m);
}

TEST_CASE("snf of the empty matrix") {
    IntMatrix m(0, 0);
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.D.rows() == 0);
    CHECK(snf.D.cols() == 0);
}

TEST_CASE("snf contract on random matrices") {
    std::mt19937_64 rng(20230817);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 6;
        std::size_t c = 1 + (trial * 7) % 6;
        check_snf_contract(random_matrix(rng, r, c, 12));
    }
    // A few with larger entries to exercise the arbitrary-precision path.
    for (int trial = 0; trial < 8; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 4, 1000000);
        check_snf_contract(m);
    }
}

TEST_CASE("hermite form is canonical for a lattice") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(rng, 4, 3, 9);
        IntMatrix shuffled = m;
        shuffled.swap_rows(0, 3);
        // Add a row multiple: same lattice.
        for (std::size_t j = 0; j < 3; ++j) shuffled.at(1, j) += 5 * shuffled.at(2, j);
        CHECK(lattice_equal(m, shuffled));
    }
    IntMatrix a(2, 2, {Int(1), Int(0), Int(0), Int(2)});
    IntMatrix b(2, 2, {Int(1), Int(0), Int(0), Int(3)});
    CHECK(!lattice_equal(a, b));
}

TEST_CASE("lattice membership and canonical reduction") {
    IntMatrix l(2, 3, {Int(2), Int(0), Int(0), Int(0), Int(0), Int(4)});
    IntMatrix h = hermite_normal_form(l);
    CHECK(lattice_contains(h, {Int(2), Int(0), Int(4)}));
    CHECK(!lattice_contains(h, {Int(1), Int(0), Int(0)}));
    CHECK(!lattice_contains(h, {Int(0), Int(1), Int(0)}));
    std::vector<Int> red = lattice_reduce(h, {Int(5), Int(2), Int(-3)});
    CHECK(red == std::vector<Int>{Int(1), Int(2), Int(1)});
    // Reduction is a coset invariant.
    std::vector<Int> red2 = lattice_reduce(h, {Int(7), Int(2), Int(1)});
    CHECK(red == red2);
}

TEST_CASE("kernel basis and solve") {
    IntMatrix m(2, 3, {Int(1), Int(2), Int(3), Int(2), Int(4), Int(6)});
    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == 2);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<Int> v = k.col(j);
        std::vector<Int> mv = m.apply(v);
        CHECK(mv == std::vector<Int>(2));
    }
    auto x = solve(m, {Int(6), Int(12)});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == std::vector<Int>{Int(6), Int(12)});
    CHECK(!solve(m, {Int(1), Int(0)}).has_value());
    // Solutions over Z can require divisibility.
    IntMatrix two(1, 1, {Int(2)});
    CHECK(!solve(two, {Int(3)}).has_value());
    CHECK(solve(two, {Int(6)}).value() == std::vector<Int>{Int(3)});
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    IntMatrix m(3, 3, {Int(2), Int(0), Int(1), Int(1), Int(3), Int(-1), Int(0), Int(4), Int(1)});
    CHECK(determinant(m) == Int(2 * (3 + 4) + 1 * 4));
    IntMatrix sing(2, 2, {Int(1), Int(2), Int(2), Int(4)});
    CHECK(determinant(sing) == 0);
}

TEST_CASE("mod-2 rank") {
    IntMatrix m(2, 2, {Int(2), Int(4), Int(1), Int(3)});
    CHECK(rank_mod2(m) == 1);
    CHECK(rank(m) == 2);
}
