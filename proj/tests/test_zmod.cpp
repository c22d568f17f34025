#include <doctest.h>

#include <random>

#include "sicmub/zmod.hpp"

using namespace sicmub;

TEST_CASE("check_prime_dim validates and precomputes inv2") {
    const PrimeDim d5 = check_prime_dim(5);
    CHECK(d5.d == 5);
    CHECK(d5.inv2 == 3);

    const PrimeDim d3 = check_prime_dim(3);
    CHECK(d3.inv2 == 2);  // 2*2 = 4 = 1 mod 3

    CHECK_THROWS_AS(check_prime_dim(6), NonPrime);
    CHECK_THROWS_AS(check_prime_dim(9), NonPrime);
    CHECK_THROWS_AS(check_prime_dim(2), EvenDim);
    CHECK_THROWS_AS(check_prime_dim(1), OutOfRange);
    CHECK_THROWS_AS(check_prime_dim(0), OutOfRange);
    CHECK_THROWS_AS(check_prime_dim(-7), OutOfRange);

    for (int d : {3, 5, 7, 11, 13})
        CHECK((2 * check_prime_dim(d).inv2) % d == 1);
}

TEST_CASE("mod_inv against exhaustive residue scan") {
    const PrimeDim d5 = check_prime_dim(5);
    const PrimeDim d7 = check_prime_dim(7);
    CHECK(mod_inv(2, d5) == 3);
    CHECK(mod_inv(1, d7) == 1);

    // Independent oracle: scan all residues for the inverse.
    auto scan_inv = [](int x, const PrimeDim& dim) {
        for (int y = 1; y < dim.d; ++y)
            if ((x * y) % dim.d == 1) return y;
        return 0;
    };
    CHECK(scan_inv(3, d7) == 5);
    CHECK(mod_inv(3, d7) == 5);
    for (int d : {3, 5, 7, 11}) {
        const PrimeDim dim = check_prime_dim(d);
        for (int x = 1; x < d; ++x) CHECK(mod_inv(x, dim) == scan_inv(x, dim));
    }

    CHECK_THROWS_AS(mod_inv(0, d5), ZeroInverse);
    CHECK_THROWS_AS(mod_inv(10, d5), ZeroInverse);
    CHECK(mod_inv(-3, d5) == mod_inv(2, d5));
}

TEST_CASE("mod_inv is an involution") {
    for (int d : {3, 5, 7, 13}) {
        const PrimeDim dim = check_prime_dim(d);
        for (int x = 1; x < d; ++x) CHECK(mod_inv(mod_inv(x, dim), dim) == x);
    }
}

TEST_CASE("symplectic product and action") {
    const PrimeDim d5 = check_prime_dim(5);
    const PrimeDim d3 = check_prime_dim(3);
    const SympMatrix g = symp_G(d5);
    const SympMatrix ginv = make_symp(1, -1, 0, 1, d5);
    const SympMatrix h = symp_H(d5);

    SUBCASE("G G^-1 = identity") {
        const SympMatrix p = symp_mul(g, ginv, d5);
        CHECK(p.alpha == 1);
        CHECK(p.beta == 0);
        CHECK(p.gamma == 0);
        CHECK(p.delta == 1);
    }
    SUBCASE("H^2 = -identity") {
        const SympMatrix p = symp_mul(symp_H(d3), symp_H(d3), d3);
        CHECK(p.alpha == 2);
        CHECK(p.beta == 0);
        CHECK(p.gamma == 0);
        CHECK(p.delta == 2);
    }
    SUBCASE("G H by hand, mod 5") {
        const SympMatrix p = symp_mul(g, h, d5);
        CHECK(p.alpha == 4);
        CHECK(p.beta == 1);
        CHECK(p.gamma == 4);
        CHECK(p.delta == 0);
    }
    SUBCASE("apply") {
        const IndexPair q{1, 2};
        CHECK(symp_apply(symp_identity(), q, d5) == q);
        // H (q1,q2) = (q2, -q1)
        CHECK(symp_apply(h, IndexPair{1, 2}, d5) == IndexPair{2, 4});
        CHECK(symp_apply(symp_G(d3), IndexPair{1, 1}, d3) == IndexPair{2, 1});
    }
    SUBCASE("non-unimodular matrix is rejected") {
        CHECK_THROWS_AS(make_symp(1, 1, 1, 1, d5), std::invalid_argument);
    }
}

TEST_CASE("group closure, associativity and compatibility of apply") {
    std::mt19937 rng(12345);
    for (int d : {3, 5, 7}) {
        const PrimeDim dim = check_prime_dim(d);
        std::uniform_int_distribution<int> coin(0, d - 1);
        auto random_symp = [&] {
            // Random [[a, b], [c, (1+bc)/a]] with invertible a.
            while (true) {
                const int a = coin(rng), b = coin(rng), c = coin(rng);
                if (a == 0) continue;
                const long long delta =
                    static_cast<long long>(mod_inv(a, dim)) * (1 + static_cast<long long>(b) * c);
                return make_symp(a, b, c, delta, dim);
            }
        };
        for (int trial = 0; trial < 50; ++trial) {
            const SympMatrix f = random_symp(), g2 = random_symp(), h2 = random_symp();
            CHECK(symp_det(symp_mul(f, g2, dim), dim) == 1);
            const SympMatrix lhs = symp_mul(symp_mul(f, g2, dim), h2, dim);
            const SympMatrix rhs = symp_mul(f, symp_mul(g2, h2, dim), dim);
            CHECK(lhs.alpha == rhs.alpha);
            CHECK(lhs.beta == rhs.beta);
            CHECK(lhs.gamma == rhs.gamma);
            CHECK(lhs.delta == rhs.delta);
            const IndexPair q{coin(rng), coin(rng)};
            CHECK(symp_apply(symp_mul(f, g2, dim), q, dim) ==
                  symp_apply(f, symp_apply(g2, q, dim), dim));
        }
    }
}
