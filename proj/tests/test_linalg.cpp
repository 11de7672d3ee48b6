#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hg/linalg.hpp"

using namespace hg;

TEST_CASE("rref ranks and pivots") {
    RatMat m(3, 4);
    // rows: x + y = 1-ish structure with a dependent third row
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3; m(0, 3) = 4;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6; m(1, 3) = 8;
    m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 1; m(2, 3) = 0;
    CHECK(rank(m) == 2);

    CHECK(rank(RatMat::identity(5)) == 5);
    CHECK(rank(RatMat(3, 3)) == 0);
}

TEST_CASE("nullspace vectors annihilate the matrix and are integer normalized") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RatMat m(4, 7);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 7; ++c) m(r, c) = coef(rng);
        auto basis = nullspace(m);
        CHECK(basis.size() == 7 - rank(m));
        for (const auto& v : basis) {
            auto mv = m.apply(v);
            for (const Rat& x : mv) CHECK(x == 0);
            Bigint g = 0;
            for (const Rat& x : v) {
                CHECK(denominator(x) == 1);
                g = gcd(g, numerator(x));
            }
            CHECK(g == 1);
        }
    }
}

TEST_CASE("solve returns a particular solution or reports inconsistency") {
    RatMat a(2, 2);
    a(0, 0) = 2; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = -1;
    auto x = solve(a, {Rat(5), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    RatMat b(2, 1);
    b(0, 0) = 1;
    b(1, 0) = 1;
    CHECK(!solve(b, {Rat(1), Rat(2)}).has_value());

    // underdetermined but consistent: free variables pinned to zero
    RatMat c(1, 3);
    c(0, 0) = 1; c(0, 1) = 1; c(0, 2) = 1;
    auto y = solve(c, {Rat(6)});
    REQUIRE(y.has_value());
    auto res = c.apply(*y);
    CHECK(res[0] == 6);
}

TEST_CASE("matrix product against hand computation") {
    RatMat a(2, 3), b(3, 2);
    int v = 1;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) a(r, c) = v++;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c) b(r, c) = v++;
    RatMat p = a * b;
    CHECK(p(0, 0) == 1 * 7 + 2 * 9 + 3 * 11);
    CHECK(p(1, 1) == 4 * 8 + 5 * 10 + 6 * 12);
}
