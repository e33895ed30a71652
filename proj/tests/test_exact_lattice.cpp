#include "oracles.hpp"

#include "xbinom/errors.hpp"
#include "xbinom/exact_lattice.hpp"

#include <doctest.h>

using namespace xbinom;

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == BigInt(1 * 2 * 3 * 4 * 5));
    CHECK(factorial(30) == oracle::factorial(30));
    CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("binom_nonneg")
{
    CHECK(binom_nonneg({5, 2}) == 10);  // 120 / (2 * 6)
    CHECK(binom_nonneg({5, 7}) == 0);
    CHECK(binom_nonneg({0, 0}) == 1);
    CHECK(binom_nonneg({5, -1}) == 0);
    CHECK_THROWS_AS(binom_nonneg({-1, 0}), DomainError);

    for (std::int64_t n = 0; n <= 60; ++n) {
        for (std::int64_t k = -3; k <= n + 3; ++k) {
            REQUIRE(binom_nonneg({n, k}) == oracle::factorial_ratio(n, k));
        }
    }
}

TEST_CASE("binom_neg follows the three negation cases")
{
    CHECK(binom_neg({-1, 0}) == 1);
    CHECK(binom_neg({-4, 2}) == 10);
    CHECK(binom_neg({-3, -5}) == 6);
    CHECK(binom_neg({-2, -1}) == 0);
    CHECK_THROWS_AS(binom_neg({0, 0}), DomainError);
}

TEST_CASE("binom_lattice dispatch")
{
    CHECK(binom_lattice(6, 3) == 20);
    CHECK(binom_lattice(-1, 1) == -1);
    CHECK(binom_lattice(-1, -1) == 1);
    CHECK(binom_lattice(200, 100) == oracle::factorial_ratio(200, 100));
}

TEST_CASE("zero region is exactly where the value vanishes")
{
    for (std::int64_t n = -20; n <= 20; ++n) {
        for (std::int64_t k = -20; k <= 20; ++k) {
            const bool zero = (n >= 0 && (k < 0 || k > n)) || (n < 0 && n < k && k < 0);
            REQUIRE(in_zero_region({n, k}) == zero);
            REQUIRE((binom_lattice(n, k) == 0) == zero);
        }
    }
}

TEST_CASE("pascal_oracle")
{
    SUBCASE("rows 0..4 are the classical triangle")
    {
        const auto t = pascal_oracle({0, 4, 0, 4});
        const int expected[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
        for (int n = 0; n <= 4; ++n) {
            for (int k = 0; k <= 4; ++k) {
                CHECK(t.at(n, k) == expected[n][k]);
            }
        }
    }
    SUBCASE("row -1 alternates")
    {
        const auto t = pascal_oracle({-1, -1, 0, 3});
        CHECK(t.at(-1, 0) == 1);
        CHECK(t.at(-1, 1) == -1);
        CHECK(t.at(-1, 2) == 1);
        CHECK(t.at(-1, 3) == -1);
    }
    SUBCASE("window entirely away from the seed row")
    {
        const LatticeWindow w{-9, -5, -12, 4};
        CHECK(pascal_oracle(w) == make_lattice_table(w));
        const LatticeWindow v{5, 9, -4, 12};
        CHECK(pascal_oracle(v) == make_lattice_table(v));
    }
    SUBCASE("equals binom_lattice on [-16,16]^2")
    {
        const auto w = LatticeWindow::square(-16, 16);
        CHECK(pascal_oracle(w) == make_lattice_table(w));
    }
    SUBCASE("empty window")
    {
        CHECK(pascal_oracle({1, 0, 0, 0}).window().cells() == 0);
    }
}

TEST_CASE("literal negation cases on a window")
{
    for (std::int64_t n = -20; n < 0; ++n) {
        for (std::int64_t k = 0; k <= 20; ++k) {
            const BigInt r = binom_lattice(-n + k - 1, k);
            REQUIRE(binom_lattice(n, k) == (is_odd(k) ? BigInt(-r) : r));
        }
        for (std::int64_t k = n - 20; k <= n; ++k) {
            const BigInt r = binom_lattice(-k - 1, n - k);
            REQUIRE(binom_lattice(n, k) == (is_odd(n - k) ? BigInt(-r) : r));
        }
    }
}

TEST_CASE("table lookup outside the window throws")
{
    const auto t = make_lattice_table({0, 2, 0, 2});
    CHECK(t.at(2, 1) == 2);
    CHECK_THROWS_AS(t.at(3, 0), DomainError);
}
