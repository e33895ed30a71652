#include "xbinom/series_expansion.hpp"

#include "xbinom/errors.hpp"

#include <algorithm>
#include <complex>
#include <cmath>
#include <limits>

namespace xbinom {

std::string_view to_string(SeriesRegime r)
{
    switch (r) {
    case SeriesRegime::FinitePositive: return "FinitePositive";
    case SeriesRegime::NegExpandInX: return "NegExpandInX";
    case SeriesRegime::NegExpandInY: return "NegExpandInY";
    }
    return "?";
}

namespace {

// Terms and partial sums are carried in extended precision: alternating
// series near the region boundary cancel heavily.
using WideComplex = std::complex<long double>;

WideComplex widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(WideComplex z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

WideComplex ipow(WideComplex base, std::int64_t e)
{
    const bool invert = e < 0;
    auto m = static_cast<std::uint64_t>(invert ? -e : e);
    WideComplex acc = 1.0L;
    while (m != 0) {
        if ((m & 1U) != 0) {
            acc *= base;
        }
        base *= base;
        m >>= 1U;
    }
    return invert ? 1.0L / acc : acc;
}

bool on_boundary(Complex x, Complex y)
{
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    return std::abs(ax - ay) <= 1e-12 * std::max(ax, ay);
}

void validate(const SeriesSpec& spec)
{
    if (!(spec.rel_tol > 0.0)) {
        throw DomainError("series rel_tol must be positive");
    }
    if (spec.max_terms < 1) {
        throw DomainError("series max_terms must be at least 1");
    }
}

void next_coefficient(BigInt& c, std::int64_t n, std::int64_t k)
{
    // c_{k+1} = c_k (n-k)/(k+1), exact because c_k (n-k) = c_{k+1} (k+1).
    c *= (n - k);
    c /= (k + 1);
}

// sum_k c_k lead^n (small/lead)^k, the expansion in `small` about 0.
SeriesResult negative_series(std::int64_t n, Complex small, Complex lead, const SeriesSpec& spec,
                             SeriesRegime regime)
{
    SeriesResult result;
    result.regime = regime;

    const WideComplex ratio = widen(small) / widen(lead);
    WideComplex power = ipow(widen(lead), n);
    if (ratio == WideComplex{}) {
        result.value = narrow(power);
        result.terms_used = 1;
        result.converged = true;
        return result;
    }

    BigInt coefficient = 1;
    WideComplex partial{};
    double last_term = 0.0;
    int quiet_run = 0;
    std::int64_t k = 0;
    for (; k < spec.max_terms; ++k) {
        const WideComplex term = coefficient.convert_to<long double>() * power;
        const Complex term_d = narrow(term);
        if (!std::isfinite(term_d.real()) || !std::isfinite(term_d.imag())) {
            throw OverflowError("series term exceeds double range");
        }
        partial += term;
        last_term = std::abs(term_d);
        quiet_run = last_term <= spec.rel_tol * std::abs(narrow(partial)) ? quiet_run + 1 : 0;
        if (quiet_run == 3) {
            result.converged = true;
            ++k;
            break;
        }
        next_coefficient(coefficient, n, k);
        power *= ratio;
    }

    result.value = narrow(partial);
    result.terms_used = k;
    // Later term ratios |ratio| (j-n)/(j+1) are non-increasing in j.
    const auto last = static_cast<double>(k - 1);
    const double rho = std::abs(ratio) * (last - static_cast<double>(n)) / (last + 1.0);
    result.tail_bound = rho < 1.0 ? last_term * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
    return result;
}

}  // namespace

SeriesRegime select_regime(std::int64_t n, Complex x, Complex y)
{
    if (n >= 0) {
        return SeriesRegime::FinitePositive;
    }
    if (on_boundary(x, y)) {
        throw BoundaryRegionError("|x| = |y|: neither negative-power expansion converges");
    }
    return std::abs(x) < std::abs(y) ? SeriesRegime::NegExpandInX : SeriesRegime::NegExpandInY;
}

SeriesResult expand_nonneg(const SeriesSpec& spec)
{
    validate(spec);
    if (spec.n < 0) {
        throw DomainError("expand_nonneg requires n >= 0");
    }
    const std::int64_t n = spec.n;
    std::vector<WideComplex> y_pow(static_cast<std::size_t>(n) + 1, WideComplex{1.0L});
    for (std::size_t i = 1; i < y_pow.size(); ++i) {
        y_pow[i] = y_pow[i - 1] * widen(spec.y);
    }
    WideComplex sum{};
    WideComplex x_pow = 1.0L;
    for (std::int64_t k = 0; k <= n; ++k) {
        const long double c = binom_nonneg({n, k}).convert_to<long double>();
        sum += c * y_pow[static_cast<std::size_t>(n - k)] * x_pow;
        x_pow *= widen(spec.x);
    }
    SeriesResult r;
    r.value = narrow(sum);
    r.terms_used = n + 1;
    r.converged = true;
    r.regime = SeriesRegime::FinitePositive;
    return r;
}

SeriesResult expand_neg_in_x(const SeriesSpec& spec)
{
    validate(spec);
    if (spec.n >= 0) {
        throw DomainError("expand_neg_in_x requires n < 0");
    }
    if (on_boundary(spec.x, spec.y)) {
        throw BoundaryRegionError("|x| = |y|: expansion in x does not converge");
    }
    if (std::abs(spec.x) > std::abs(spec.y)) {
        throw NonConvergentRegionError("expansion in x converges only for |x| < |y|");
    }
    return negative_series(spec.n, spec.x, spec.y, spec, SeriesRegime::NegExpandInX);
}

SeriesResult expand_neg_in_y(const SeriesSpec& spec)
{
    validate(spec);
    if (spec.n >= 0) {
        throw DomainError("expand_neg_in_y requires n < 0");
    }
    if (on_boundary(spec.x, spec.y)) {
        throw BoundaryRegionError("|x| = |y|: expansion in y does not converge");
    }
    if (std::abs(spec.x) < std::abs(spec.y)) {
        throw NonConvergentRegionError("expansion in y converges only for |x| > |y|");
    }
    SeriesSpec swapped = spec;
    std::swap(swapped.x, swapped.y);
    SeriesResult r = expand_neg_in_x(swapped);
    r.regime = SeriesRegime::NegExpandInY;
    return r;
}

SeriesResult expand(const SeriesSpec& spec)
{
    switch (select_regime(spec.n, spec.x, spec.y)) {
    case SeriesRegime::FinitePositive: return expand_nonneg(spec);
    case SeriesRegime::NegExpandInX: return expand_neg_in_x(spec);
    case SeriesRegime::NegExpandInY: return expand_neg_in_y(spec);
    }
    return {};
}

std::vector<BigInt> negative_power_coefficients(std::int64_t n, std::size_t count)
{
    if (n >= 0) {
        throw DomainError("negative_power_coefficients requires n < 0");
    }
    std::vector<BigInt> out;
    out.reserve(count);
    BigInt c = 1;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(c);
        next_coefficient(c, n, static_cast<std::int64_t>(k));
    }
    return out;
}

std::vector<double> negative_power_term_magnitudes(std::int64_t n, Complex x, Complex y, SeriesRegime regime,
                                                   std::size_t count)
{
    if (regime == SeriesRegime::FinitePositive) {
        throw DomainError("term magnitudes are defined for the negative-power expansions only");
    }
    const Complex small = regime == SeriesRegime::NegExpandInX ? x : y;
    const Complex lead = regime == SeriesRegime::NegExpandInX ? y : x;
    // Work in logs so wrong-side terms do not overflow.
    const double log_ratio = std::log(std::abs(small)) - std::log(std::abs(lead));
    const double log_lead = static_cast<double>(n) * std::log(std::abs(lead));
    std::vector<double> out;
    out.reserve(count);
    const auto coeffs = negative_power_coefficients(n, count);
    for (std::size_t k = 0; k < count; ++k) {
        const double log_c = std::log(boost::multiprecision::abs(coeffs[k]).convert_to<double>());
        out.push_back(std::exp(log_c + log_lead + static_cast<double>(k) * log_ratio));
    }
    return out;
}

}  // namespace xbinom
