#include "oracles.hpp"

#include "xbinom/binomial_eval.hpp"
#include "xbinom/continuity_probe.hpp"
#include "xbinom/errors.hpp"
#include "xbinom/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace xbinom;
using oracle::relative_error;

namespace {

Complex finite(const ExtendedValue& v)
{
    REQUIRE(v.is_finite());
    return v.value();
}

}  // namespace

TEST_CASE("classify_point")
{
    CHECK(classify_point(-4.0, 2.0) == PointClass::IntegerLattice);
    CHECK(classify_point(-2.0, 0.5) == PointClass::NegativeIntXNonIntY);
    CHECK(classify_point(0.5, 0.25) == PointClass::GammaRegular);
    CHECK(classify_point({-3.0 + 1e-13, 0.0}, {2.0, -1e-13}) == PointClass::IntegerLattice);
    CHECK(classify_point(-2.0, {1.0, 1.0}) == PointClass::NegativeIntXNonIntY);
    CHECK(classify_point(0.5, -1.0) == PointClass::DenominatorPoleZero);
    CHECK(classify_point(0.5, 1.5) == PointClass::DenominatorPoleZero);
    CHECK(classify_point({0.5, 2.0}, {3.5, 2.0}) == PointClass::DenominatorPoleZero);
    // A nonnegative integer x with non-integer y has no pole anywhere.
    CHECK(classify_point(3.0, 0.5) == PointClass::GammaRegular);
    CHECK(to_string(PointClass::DenominatorPoleZero) == "DenominatorPoleZero");
}

TEST_CASE("binom_complex examples")
{
    CHECK(finite(binom_complex(0.5, 0.5)).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binom_complex(-2.0, 0.5).is_infinite());
    CHECK(finite(binom_complex(-4.0, 2.0)) == Complex{10.0, 0.0});
    // mpmath: gamma(1.5)/gamma(1.25)^2
    CHECK(finite(binom_complex(0.5, 0.25)).real() == doctest::Approx(1.0787052023767587).epsilon(1e-13));
    CHECK(finite(binom_complex(0.5, -1.0)) == Complex{});
    CHECK(finite(binom_complex(0.5, 1.5)) == Complex{});
}

TEST_CASE("binom_complex against reference values")
{
    struct Ref {
        Complex x, y, value;
    };
    const Ref refs[] = {
        {0.5, 0.2, {1.0754795572519167589, 0.0}},
        {{1.5, 2.0}, {-0.75, 0.5}, {0.069444392847648617312, 0.21884212208186356827}},
        {{-3.3, 0.4}, {2.2, -1.1}, {239.10099964777665031, -85.360926512689018397}},
        {6.0, 2.5, {18.625675625840094152, 0.0}},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CAPTURE(r.y);
        CHECK(relative_error(finite(binom_complex(r.x, r.y)), r.value) < 1e-12);
    }
    // Real inputs give a real result.
    CHECK(finite(binom_complex(6.0, 2.5)).imag() == 0.0);
}

TEST_CASE("y = 0 gives 1 everywhere")
{
    SampleRng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const Complex x{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        REQUIRE(relative_error(finite(binom_complex(x, 0.0)), 1.0) < 1e-12);
    }
    CHECK(finite(binom_complex(-7.0, 0.0)) == Complex{1.0, 0.0});
}

TEST_CASE("exact side channel")
{
    CHECK(binom_exact(5.0, 2.0) == BigInt(10));
    CHECK(binom_exact(-1.0, -2.0) == BigInt(-1));
    CHECK(binom_exact(0.5, 0.5) == std::nullopt);
    CHECK(snap_lattice({-3.0, 1e-13}, 4.0) == LatticePoint{-3, 4});
    CHECK(snap_lattice(-3.0, 4.5) == std::nullopt);
    CHECK_THROWS_AS(to_double_checked(oracle::factorial(200)), OverflowError);
}

TEST_CASE("lattice consistency on [-32,32]^2")
{
    for (std::int64_t n = -32; n <= 32; ++n) {
        for (std::int64_t k = -32; k <= 32; ++k) {
            const Complex x{static_cast<double>(n), 0.0};
            const Complex y{static_cast<double>(k), 0.0};
            const BigInt exact = binom_lattice(n, k);
            REQUIRE(binom_exact(x, y) == exact);
            const Complex v = finite(binom_complex(x, y));
            if (exact == 0) {
                REQUIRE(v == Complex{});
            } else {
                REQUIRE(relative_error(v, exact.convert_to<double>()) < 1e-12);
            }
        }
    }
}

TEST_CASE("symmetry y -> x - y at regular points")
{
    SampleRng rng(22);
    int checked = 0;
    while (checked < 5000) {
        const Complex x{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const Complex y{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        if (classify_point(x, y) != PointClass::GammaRegular) {
            continue;
        }
        REQUIRE(relative_error(finite(binom_complex(x, x - y)), finite(binom_complex(x, y))) < 1e-10);
        ++checked;
    }
}

TEST_CASE("continuity toward the lattice on [-8,8]^2")
{
    for (std::int64_t n = -8; n <= 8; ++n) {
        for (std::int64_t k = -8; k <= 8; ++k) {
            const Direction d = lattice_direction({n, k});
            const double delta = 1e-7;
            const Complex x = static_cast<double>(n) + delta * d.dx;
            const Complex y = static_cast<double>(k) + delta * d.dy;
            const double want = binom_lattice(n, k).convert_to<double>();
            const Complex got = finite(binom_complex(x, y));
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(std::abs(got - want) / std::max(1.0, std::abs(want)) < 1e-4);
        }
    }
}

TEST_CASE("simple pole on the infinite set")
{
    for (auto [x, y] : {std::pair{-2.0, 0.5}, std::pair{-1.0, 0.25}, std::pair{-5.0, 2.75}}) {
        const double c4 = std::abs(finite(binom_complex(x + 1e-4, y))) * 1e-4;
        const double c6 = std::abs(finite(binom_complex(x + 1e-6, y))) * 1e-6;
        CAPTURE(x);
        CHECK(c4 > 0.0);
        CHECK(std::abs(c4 - c6) / c6 < 1e-2);
    }
}

TEST_CASE("overflow is an error, not a pole")
{
    CHECK_THROWS_AS(binom_complex(2000.5, 1000.25), OverflowError);
    CHECK_THROWS_AS(binom_complex(2000.0, 1000.0), OverflowError);
    CHECK_NOTHROW(binom_complex(1000.0, 500.0));
}
