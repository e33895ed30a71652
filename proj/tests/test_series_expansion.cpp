#include "oracles.hpp"

#include "xbinom/errors.hpp"
#include "xbinom/random.hpp"
#include "xbinom/series_expansion.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace xbinom;
using oracle::relative_error;

namespace {

SeriesSpec spec_of(std::int64_t n, Complex x, Complex y) { return {n, x, y}; }

// (x, y) with |y| in [0.5, 2], |x| = ratio |y|, phases uniform.
std::pair<Complex, Complex> sample_pair(SampleRng& rng, double ratio)
{
    const double ry = rng.uniform(0.5, 2.0);
    const Complex y = std::polar(ry, rng.uniform(0.0, 2 * std::numbers::pi));
    const Complex x = std::polar(ratio * ry, rng.uniform(0.0, 2 * std::numbers::pi));
    return {x, y};
}

}  // namespace

TEST_CASE("select_regime")
{
    CHECK(select_regime(3, 100.0, 0.1) == SeriesRegime::FinitePositive);
    CHECK(select_regime(0, 0.0, 0.0) == SeriesRegime::FinitePositive);
    CHECK(select_regime(-2, 0.3, 1.0) == SeriesRegime::NegExpandInX);
    CHECK(select_regime(-2, {0.0, 3.0}, 1.0) == SeriesRegime::NegExpandInY);
    CHECK_THROWS_AS(select_regime(-2, 1.0, 1.0), BoundaryRegionError);
    CHECK_THROWS_AS(select_regime(-2, {0.0, 1.0}, -1.0), BoundaryRegionError);
    CHECK_THROWS_AS(select_regime(-2, 1.0 + 1e-13, 1.0), BoundaryRegionError);
    CHECK(select_regime(-2, 1.0 + 1e-9, 1.0) == SeriesRegime::NegExpandInY);
}

TEST_CASE("expand_nonneg")
{
    const auto a = expand_nonneg(spec_of(2, 1.0, 1.0));
    CHECK(a.value == Complex{4.0, 0.0});
    CHECK(a.terms_used == 3);
    CHECK(a.converged);
    CHECK(a.regime == SeriesRegime::FinitePositive);
    CHECK(expand_nonneg(spec_of(3, 2.0, 1.0)).value == Complex{27.0, 0.0});
    const auto c = expand_nonneg(spec_of(0, {3.0, -1.0}, 7.0));
    CHECK(c.value == Complex{1.0, 0.0});
    CHECK(c.terms_used == 1);
    CHECK_THROWS_AS(expand_nonneg(spec_of(-1, 0.5, 1.0)), DomainError);

    SampleRng rng(41);
    for (std::int64_t n = 0; n <= 20; ++n) {
        const Complex x{rng.uniform(0.1, 2), rng.uniform(-2, 2)};
        const Complex y{rng.uniform(0.1, 2), rng.uniform(-2, 2)};
        const auto r = expand_nonneg(spec_of(n, x, y));
        CHECK(r.terms_used == n + 1);
        CHECK(relative_error(r.value, oracle::direct_power(x + y, n)) < 1e-10);
    }
}

TEST_CASE("expand_neg_in_x")
{
    const auto a = expand_neg_in_x(spec_of(-1, 0.5, 1.0));
    CHECK(a.converged);
    CHECK(a.regime == SeriesRegime::NegExpandInX);
    CHECK(std::abs(a.value - 2.0 / 3.0) < 1e-12);
    CHECK(a.tail_bound < 1e-11);

    CHECK(std::abs(expand_neg_in_x(spec_of(-2, 0.25, 1.0)).value - 0.64) < 1e-12);
    CHECK_THROWS_AS(expand_neg_in_x(spec_of(-1, 2.0, 1.0)), NonConvergentRegionError);
    CHECK_THROWS_AS(expand_neg_in_x(spec_of(-1, 1.0, 1.0)), BoundaryRegionError);
    CHECK_THROWS_AS(expand_neg_in_x(spec_of(1, 0.5, 1.0)), DomainError);

    SeriesSpec capped = spec_of(-3, 0.99, 1.0);
    capped.max_terms = 10;
    const auto c = expand_neg_in_x(capped);
    CHECK_FALSE(c.converged);
    CHECK(c.terms_used == 10);
}

TEST_CASE("expand_neg_in_y")
{
    const auto a = expand_neg_in_y(spec_of(-1, 2.0, 1.0));
    CHECK(a.converged);
    CHECK(a.regime == SeriesRegime::NegExpandInY);
    CHECK(std::abs(a.value - 1.0 / 3.0) < 1e-12);

    const auto b = expand_neg_in_y(spec_of(-3, 2.0, 0.0));
    CHECK(b.value == Complex{0.125, 0.0});
    CHECK(b.terms_used == 1);

    CHECK_THROWS_AS(expand_neg_in_y(spec_of(-1, 0.5, 1.0)), NonConvergentRegionError);
    CHECK_THROWS_AS(expand_neg_in_y(spec_of(-1, 1.0, -1.0)), BoundaryRegionError);
}

TEST_CASE("regime duality")
{
    SampleRng rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto n = rng.integer(-6, -1);
        auto [x, y] = sample_pair(rng, rng.uniform(1.1, 10.0));
        const auto a = expand_neg_in_y(spec_of(n, x, y));
        const auto b = expand_neg_in_x(spec_of(n, y, x));
        REQUIRE(a.value == b.value);
        REQUIRE(a.terms_used == b.terms_used);
    }
}

TEST_CASE("closed form agreement")
{
    SampleRng rng(43);
    double worst = 0.0;
    for (std::int64_t n = -6; n <= 6; ++n) {
        for (int i = 0; i < 1000; ++i) {
            const bool inner = rng.unit() < 0.5;
            const double ratio = inner ? rng.uniform(0.1, 0.9) : rng.uniform(1.1, 10.0);
            auto [x, y] = sample_pair(rng, ratio);
            const auto r = expand(spec_of(n, x, y));
            REQUIRE(r.converged);
            worst = std::max(worst, relative_error(r.value, oracle::direct_power(x + y, n)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("coefficients match the lattice")
{
    for (std::int64_t n = -10; n <= -1; ++n) {
        const auto c = negative_power_coefficients(n, 65);
        REQUIRE(c.size() == 65);
        for (std::int64_t k = 0; k <= 64; ++k) {
            REQUIRE(c[k] == binom_lattice(n, k));
        }
    }
}

TEST_CASE("reindexing the expansion in y")
{
    // sum over k <= n of C(n,k) x^k y^(n-k) with C(n,k) = (-1)^(n-k) C(-k-1, n-k)
    // becomes the expansion in y after k -> n - k.
    for (std::int64_t n = -8; n <= -1; ++n) {
        const auto c = negative_power_coefficients(n, 65);
        for (std::int64_t j = 0; j <= 64; ++j) {
            const std::int64_t k = n - j;
            const BigInt mirrored = (j % 2 == 0 ? 1 : -1) * binom_lattice(-k - 1, j);
            REQUIRE(mirrored == binom_lattice(n, k));
            REQUIRE(mirrored == c[j]);
        }
    }
}

TEST_CASE("divergence witness on the wrong side")
{
    for (std::int64_t n : {-1, -3, -6}) {
        const auto m = negative_power_term_magnitudes(n, 1.05, 1.0, SeriesRegime::NegExpandInX, 1000);
        REQUIRE(m.size() == 1000);
        std::size_t first = m.size();
        for (std::size_t k = 1; k < m.size(); ++k) {
            if (m[k] > m[k - 1]) {
                first = std::min(first, k);
            } else {
                first = m.size();
            }
        }
        CAPTURE(n);
        CHECK(first < 1000);
        CHECK(m.back() > m.front());
    }
    const auto good = negative_power_term_magnitudes(-2, 0.5, 1.0, SeriesRegime::NegExpandInX, 200);
    CHECK(good.back() < good.front());
}

TEST_CASE("heavy cancellation near the boundary")
{
    // Terms alternate in sign; sum |t_k| / |value| = 19^6 at ratio 0.9.
    for (std::int64_t n = -6; n <= -1; ++n) {
        const auto r = expand(spec_of(n, 0.9, 1.0));
        CAPTURE(n);
        CHECK(relative_error(r.value, std::pow(1.9, static_cast<double>(n))) < 1e-10);
        const auto s = expand(spec_of(n, 1.0, {0.0, 0.9}));
        CHECK(relative_error(s.value, oracle::direct_power(Complex{1.0, 0.9}, n)) < 1e-10);
    }
}
