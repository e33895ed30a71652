#pragma once

#include "xbinom/exact_lattice.hpp"
#include "xbinom/gamma_engine.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace xbinom {

// Which binomial-theorem expansion of (x+y)^n applies.
enum class SeriesRegime {
    FinitePositive,  // n >= 0: finite sum, any x, y
    NegExpandInX,    // n < 0, |x| < |y|: Taylor series in x about 0
    NegExpandInY,    // n < 0, |x| > |y|: Taylor series in y about 0
};

std::string_view to_string(SeriesRegime r);

struct SeriesSpec {
    std::int64_t n = 0;
    Complex x{};
    Complex y{};
    double rel_tol = 1e-12;
    std::int64_t max_terms = 1'000'000;
};

struct SeriesResult {
    Complex value{};
    std::int64_t terms_used = 0;
    bool converged = false;
    SeriesRegime regime = SeriesRegime::FinitePositive;
    // Geometric bound on the neglected tail magnitude; +inf when the term
    // ratio has not yet dropped below 1. Zero for the finite sum.
    double tail_bound = 0.0;
};

// n >= 0 -> FinitePositive; n < 0 -> the series whose expansion variable is
// the smaller in modulus. Throws BoundaryRegionError when n < 0 and |x| = |y|
// to relative 1e-12.
SeriesRegime select_regime(std::int64_t n, Complex x, Complex y);

// sum_{k=0}^{n} C(n,k) y^(n-k) x^k. Throws DomainError for n < 0.
SeriesResult expand_nonneg(const SeriesSpec& spec);

// sum_{k>=0} (-1)^k C(-n+k-1,k) y^(n-k) x^k. Requires n < 0 and |x| < |y|;
// otherwise throws NonConvergentRegionError (BoundaryRegionError on |x|=|y|).
// Stops once three consecutive terms fall below rel_tol times the partial sum;
// max_terms exhausted gives converged = false with the partial value.
SeriesResult expand_neg_in_x(const SeriesSpec& spec);

// sum_{k>=0} (-1)^k C(-n+k-1,k) x^(n-k) y^k; expand_neg_in_x with x and y
// interchanged. Requires n < 0 and |x| > |y|.
SeriesResult expand_neg_in_y(const SeriesSpec& spec);

// Dispatches through select_regime.
SeriesResult expand(const SeriesSpec& spec);

// Exact coefficient (-1)^k C(-n+k-1, k) of x^k in the expansion in x, for
// n < 0 and k = 0..count-1, generated by the ratio recurrence
// c_{k+1} = c_k (n-k)/(k+1).
std::vector<BigInt> negative_power_coefficients(std::int64_t n, std::size_t count);

// |term_k| for k = 0..count-1 of the chosen negative-power expansion,
// without any region check. Used to witness divergence on the wrong side.
std::vector<double> negative_power_term_magnitudes(std::int64_t n, Complex x, Complex y, SeriesRegime regime,
                                                   std::size_t count);

}  // namespace xbinom
