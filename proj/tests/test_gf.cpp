#include <catch2/catch_amalgamated.hpp>

#include "circix/gf.hpp"
#include "circix/prng.hpp"

using namespace circix;

namespace {

GFMatrix random_matrix(SplitMix64& rng, const PrimeField& f, int rows, int cols) {
    GFMatrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<int>(rng.below(f.q())));
    return m;
}

}  // namespace

TEST_CASE("prime field construction") {
    CHECK(PrimeField(2).q() == 2);
    CHECK(PrimeField(251).q() == 251);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(253), std::invalid_argument);  // 11 * 23
}

TEST_CASE("field operations") {
    CHECK(PrimeField(7).inv(3) == 5);
    CHECK(PrimeField(2).add(1, 1) == 0);
    CHECK(PrimeField(5).mul(4, 4) == 1);
    CHECK(PrimeField(3).sub(0, 2) == 1);
    CHECK_THROWS_AS(PrimeField(7).inv(0), std::domain_error);

    PrimeField f(251);
    for (int a = 1; a < 251; a += 17) CHECK(f.mul(f.inv(a), a) == 1);
}

TEST_CASE("rank") {
    PrimeField f2(2);
    CHECK(rank(GFMatrix::identity(f2, 4)) == 4);
    CHECK(rank(GFMatrix(f2, 3, 5)) == 0);
    // Three rows of F_2^3 that sum to zero.
    GFMatrix m(f2, 3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1});
    CHECK(rank(m) == 2);
}

TEST_CASE("in_span") {
    PrimeField f2(2);
    CHECK(in_span({0, 0}, {}, f2));
    CHECK_FALSE(in_span({1, 0}, {{0, 1}}, f2));
    CHECK(in_span({1, 1, 0}, {{1, 0, 1}, {0, 1, 1}}, f2));
    CHECK_THROWS_AS(in_span({1, 0}, {{1, 0, 0}}, f2), std::invalid_argument);
}

TEST_CASE("kron") {
    PrimeField f2(2);
    CHECK(kron(GFMatrix::identity(f2, 2), GFMatrix::identity(f2, 3)) ==
          GFMatrix::identity(f2, 6));
    GFMatrix one(f2, 1, 1, {1});
    GFMatrix v(f2, 3, 1, {1, 0, 1});
    CHECK(kron(one, v) == v);
    GFMatrix a(f2, 2, 1, {1, 0});
    GFMatrix b(f2, 2, 1, {1, 1});
    CHECK(kron(a, b) == GFMatrix(f2, 4, 1, {1, 1, 0, 0}));
    CHECK_THROWS_AS(kron(a, GFMatrix(PrimeField(3), 1, 1, {1})), std::invalid_argument);
}

TEST_CASE("rank of kron is product of ranks") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        PrimeField f(trial % 2 == 0 ? 2 : 3);
        auto a = random_matrix(rng, f, 1 + rng.below(3), 1 + rng.below(3));
        auto b = random_matrix(rng, f, 1 + rng.below(3), 1 + rng.below(3));
        CHECK(rank(kron(a, b)) == rank(a) * rank(b));
    }
}

TEST_CASE("in_span agrees with the rank formulation") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        PrimeField f(trial % 2 == 0 ? 2 : 5);
        const int dim = 2 + static_cast<int>(rng.below(3));
        const int count = static_cast<int>(rng.below(4));
        std::vector<std::vector<int>> basis;
        for (int i = 0; i < count; ++i) {
            std::vector<int> u(dim);
            for (int& e : u) e = static_cast<int>(rng.below(f.q()));
            basis.push_back(u);
        }
        std::vector<int> v(dim);
        for (int& e : v) e = static_cast<int>(rng.below(f.q()));

        GFMatrix without(f, count, dim);
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < dim; ++c) without.set(r, c, basis[r][c]);
        GFMatrix with(f, count + 1, dim);
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < dim; ++c) with.set(r, c, basis[r][c]);
        for (int c = 0; c < dim; ++c) with.set(count, c, v[c]);

        CHECK(in_span(v, basis, f) == (rank(with) == rank(without)));
    }
}
