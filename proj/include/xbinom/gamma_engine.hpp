#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace xbinom {

using Complex = std::complex<double>;

// Radius within which a floating argument is treated as an exact integer.
inline constexpr double kSnapRadius = 1e-12;

// Returns the integer s snaps to, if any. Integers outside +-2^53 are not
// representable exactly and never snap.
std::optional<std::int64_t> snap_integer(Complex s);

inline bool is_nonpositive_integer(Complex s)
{
    const auto m = snap_integer(s);
    return m && *m <= 0;
}

// Finite complex value, an (unsigned) gamma pole, or a 0 * inf form.
class ExtendedValue {
public:
    enum class Tag { Finite, Infinite, Indeterminate };

    static ExtendedValue finite(Complex v) { return ExtendedValue(Tag::Finite, v); }
    static ExtendedValue infinite() { return ExtendedValue(Tag::Infinite, {}); }
    static ExtendedValue indeterminate() { return ExtendedValue(Tag::Indeterminate, {}); }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_infinite() const { return tag_ == Tag::Infinite; }
    bool is_indeterminate() const { return tag_ == Tag::Indeterminate; }
    bool is_zero() const { return is_finite() && value_ == Complex{}; }

    // Only meaningful when is_finite().
    Complex value() const { return value_; }

    friend ExtendedValue operator*(const ExtendedValue& a, const ExtendedValue& b);
    friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);

private:
    ExtendedValue(Tag t, Complex v) : tag_(t), value_(v) {}

    Tag tag_;
    Complex value_;
};

// log Gamma(s) as magnitude and principal phase in (-pi, pi].
struct LogGammaValue {
    double log_magnitude = 0.0;
    double phase = 0.0;
};

// log sin(pi s) on an unrestricted branch. Stays finite for large |Im s|
// where sin itself would overflow. s must not be an integer.
Complex log_sin_pi(Complex s);

// log Gamma(s) with the imaginary part left on a continuous branch (not
// reduced mod 2*pi). Throws PoleError at nonpositive integers.
Complex log_gamma_raw(Complex s);

// Principal log Gamma(s). Throws PoleError at nonpositive integers.
LogGammaValue log_gamma(Complex s);

// Gamma(s); Infinite at nonpositive integers. Throws OverflowError when the
// finite value exceeds double range.
ExtendedValue gamma(Complex s);

// 1/Gamma(s), which is entire; exactly zero at the poles of Gamma.
Complex recip_gamma(Complex s);

// Gamma(s-a+1)/Gamma(s-b+1) for integer a, b, evaluated from whichever side
// of the identity
//     Gamma(s-a+1)/Gamma(s-b+1) = (-1)^(b-a) Gamma(b-s)/Gamma(a-s)
// is free of poles. A pole only in a denominator yields 0. Throws PoleError
// if the ratio itself is infinite.
Complex gamma_ratio_sym(Complex s, std::int64_t a, std::int64_t b);

// Leading term (-1)^n n! x of 1/Gamma(x-n) for small x. Throws DomainError
// for negative n.
Complex recip_gamma_leading(std::int64_t n, Complex x);

// |Gamma(s) Gamma(1-s) sin(pi s) - pi| / pi. Throws DomainError at integers.
double reflection_residual(Complex s);

}  // namespace xbinom
