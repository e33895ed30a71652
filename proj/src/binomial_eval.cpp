#include "xbinom/binomial_eval.hpp"

#include "xbinom/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace xbinom {

std::string_view to_string(PointClass c)
{
    switch (c) {
    case PointClass::IntegerLattice: return "IntegerLattice";
    case PointClass::NegativeIntXNonIntY: return "NegativeIntXNonIntY";
    case PointClass::DenominatorPoleZero: return "DenominatorPoleZero";
    case PointClass::GammaRegular: return "GammaRegular";
    }
    return "?";
}

std::optional<LatticePoint> snap_lattice(Complex x, Complex y)
{
    const auto n = snap_integer(x);
    const auto k = snap_integer(y);
    if (n && k) {
        return LatticePoint{*n, *k};
    }
    return std::nullopt;
}

PointClass classify_point(Complex x, Complex y)
{
    const auto n = snap_integer(x);
    const auto k = snap_integer(y);
    if (n && k) {
        return PointClass::IntegerLattice;
    }
    if (n && *n < 0) {
        return PointClass::NegativeIntXNonIntY;
    }
    if (!n && (is_nonpositive_integer(y + 1.0) || is_nonpositive_integer(x - y + 1.0))) {
        return PointClass::DenominatorPoleZero;
    }
    return PointClass::GammaRegular;
}

double to_double_checked(const BigInt& v)
{
    const double d = v.convert_to<double>();
    if (!std::isfinite(d)) {
        throw OverflowError("lattice value exceeds double range");
    }
    return d;
}

std::optional<BigInt> binom_exact(Complex x, Complex y)
{
    if (const auto p = snap_lattice(x, y)) {
        return binom_lattice(*p);
    }
    return std::nullopt;
}

ExtendedValue binom_complex(Complex x, Complex y)
{
    switch (classify_point(x, y)) {
    case PointClass::IntegerLattice:
        return ExtendedValue::finite(to_double_checked(binom_lattice(*snap_lattice(x, y))));
    case PointClass::NegativeIntXNonIntY:
        return ExtendedValue::infinite();
    case PointClass::DenominatorPoleZero:
        return ExtendedValue::finite(0.0);
    case PointClass::GammaRegular:
        break;
    }

    const Complex lg = log_gamma_raw(x + 1.0) - log_gamma_raw(y + 1.0) - log_gamma_raw(x - y + 1.0);
    if (lg.real() > std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("binomial coefficient exceeds double range");
    }
    const double magnitude = std::exp(lg.real());
    if (x.imag() == 0.0 && y.imag() == 0.0) {
        // The phase is a multiple of pi up to rounding.
        return ExtendedValue::finite(std::cos(lg.imag()) < 0 ? -magnitude : magnitude);
    }
    const double phase = std::remainder(lg.imag(), 2 * std::numbers::pi);
    return ExtendedValue::finite(std::polar(magnitude, phase));
}

}  // namespace xbinom
