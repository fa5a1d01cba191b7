#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffhg/field_core.hpp"

using namespace ffhg;

namespace {

// Exhaustive-search oracle: all roots of x^2 + 1 mod p.
std::vector<i64> quartic_roots_oracle(i64 p) {
    std::vector<i64> out;
    for (i64 x = 0; x < p; ++x)
        if ((x * x + 1) % p == 0) out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(1999));
    CHECK(is_prime(104729));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));      // Carmichael
    CHECK_FALSE(is_prime(3215031751LL));
    CHECK_FALSE(is_prime(99999999));
}

TEST_CASE("context construction and generator choice") {
    PrimeContext ctx(5, {4});
    CHECK(ctx.generator() == 2);
    CHECK(ctx.root(4) == 2);  // smaller of {2, 3}

    PrimeContext ctx13(13, {4});
    CHECK(ctx13.root(4) == 5);  // exhaustive oracle gives {5, 8}
    auto roots = quartic_roots_oracle(13);
    REQUIRE(roots.size() == 2);
    CHECK(ctx13.root(4) == roots.front());

    CHECK_THROWS_AS(PrimeContext(7, {4}), OrderNotDividing);
    CHECK_THROWS_AS(PrimeContext(9, {}), NotPrime);
    CHECK_THROWS_AS(PrimeContext(2, {}), NotPrime);
}

TEST_CASE("generator is the smallest primitive root") {
    for (i64 p : {5, 7, 13, 17, 41, 97, 193}) {
        PrimeContext ctx(p, {});
        i64 g = ctx.generator();
        auto fs = prime_factors(p - 1);
        for (i64 q : fs) CHECK(mod_pow(g, (p - 1) / q, p) != 1);
        for (i64 h = 2; h < g; ++h) {
            bool primitive = true;
            for (i64 q : fs)
                if (mod_pow(h, (p - 1) / q, p) == 1) primitive = false;
            CHECK_FALSE(primitive);
        }
    }
}

TEST_CASE("dlog") {
    PrimeContext ctx(5, {});
    CHECK(ctx.dlog(1) == 0);
    CHECK(ctx.dlog(4) == 2);  // 2^2 = 4
    PrimeContext ctx13(13, {});
    CHECK(ctx13.dlog(ctx13.generator()) == 1);
    CHECK_THROWS_AS(ctx13.dlog(0), ZeroArgument);
    CHECK_THROWS_AS(ctx13.dlog(13), ZeroArgument);

    // dlog is a complete table: g^dlog(x) = x for every x.
    for (i64 x = 1; x < 13; ++x) CHECK(mod_pow(ctx13.generator(), ctx13.dlog(x), 13) == x);
}

TEST_CASE("dlog is additive") {
    PrimeContext ctx(97, {});
    std::mt19937 rng(42);
    for (int it = 0; it < 200; ++it) {
        i64 x = 1 + rng() % 96, y = 1 + rng() % 96;
        CHECK(ctx.dlog(ctx.mul(x, y)) == (ctx.dlog(x) + ctx.dlog(y)) % 96);
    }
}

TEST_CASE("quadratic character") {
    PrimeContext ctx(13, {});
    CHECK(ctx.quadratic_character(0) == 0);
    CHECK(ctx.quadratic_character(4) == 1);
    CHECK(ctx.quadratic_character(2) == -1);  // Euler: 2^6 = 64 = -1 mod 13

    for (i64 p : {5, 13, 17, 19, 23}) {
        PrimeContext c(p, {});
        i64 total = 0;
        for (i64 x = 1; x < p; ++x) {
            // agrees with Euler's criterion
            i64 euler = mod_pow(x, (p - 1) / 2, p);
            CHECK(c.quadratic_character(x) == (euler == 1 ? 1 : -1));
            total += c.quadratic_character(x);
        }
        CHECK(total == 0);
        // multiplicativity
        std::mt19937 rng(7);
        for (int it = 0; it < 100; ++it) {
            i64 x = 1 + rng() % (p - 1), y = 1 + rng() % (p - 1);
            CHECK(c.quadratic_character(x) * c.quadratic_character(y) == c.quadratic_character(c.mul(x, y)));
        }
    }
}

TEST_CASE("stored roots satisfy their cyclotomic polynomial") {
    PrimeContext ctx(73, {2, 3, 4, 6, 8, 12, 24});
    for (auto [n, r] : ctx.roots()) {
        // exact multiplicative order n
        CHECK(mod_pow(r, n, 73) == 1);
        for (int d = 1; d < n; ++d)
            if (n % d == 0) CHECK(mod_pow(r, d, 73) != 1);
        // compatibility: r^(N/d) is a root of Phi_d
        for (int d = 2; d < n; ++d) {
            if (n % d != 0) continue;
            i64 rd = mod_pow(r, n / d, 73);
            i64 ord = 1;
            i64 v = rd;
            while (v != 1) { v = v * rd % 73; ++ord; }
            CHECK(ord == d);
        }
    }
}

TEST_CASE("derived roots") {
    PrimeContext ctx73(73, {8, 12});
    i64 s = ctx73.derived_root(Subfield::SqrtMinus2);
    CHECK(ctx73.mul(s, s) == 71);  // -2 mod 73
    i64 i4 = ctx73.derived_root(Subfield::IFromZeta12);
    CHECK(ctx73.mul(i4, i4) == 72);
    i64 s3 = ctx73.derived_root(Subfield::SqrtMinus3);
    CHECK(ctx73.mul(s3, s3) == 70);

    PrimeContext ctx13(13, {4});
    CHECK_THROWS_AS(ctx13.derived_root(Subfield::SqrtMinus2), MissingRoot);

    // p = 1 mod 8 identity holds across a range
    for (i64 p = 17; p < 500; ++p) {
        if (!is_prime(p) || p % 8 != 1) continue;
        PrimeContext c(p, {8});
        i64 t = c.derived_root(Subfield::SqrtMinus2);
        CHECK(c.mul(t, t) == p - 2);
    }
}

TEST_CASE("sqrt via dlog") {
    PrimeContext ctx(41, {});
    for (i64 x = 1; x < 41; ++x) {
        if (ctx.quadratic_character(x) != 1) {
            CHECK_THROWS_AS(ctx.sqrt(x), NoSquareRoot);
            continue;
        }
        i64 s = ctx.sqrt(x);
        CHECK(ctx.mul(s, s) == x);
        CHECK(s <= 41 - s);
    }
}

TEST_CASE("root override") {
    PrimeContext ctx(13, {4}, {{4, 8}});
    CHECK(ctx.root(4) == 8);
    CHECK_THROWS(PrimeContext(13, {4}, {{4, 7}}));   // 7 is not a root of x^2+1
    CHECK_THROWS(PrimeContext(13, {4}, {{8, 5}}));   // order 8 not requested (8 does not divide 12)
}
