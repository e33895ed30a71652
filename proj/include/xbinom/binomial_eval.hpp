#pragma once

#include "xbinom/exact_lattice.hpp"
#include "xbinom/gamma_engine.hpp"

#include <optional>
#include <string_view>

namespace xbinom {

enum class PointClass {
    // Both arguments snap to integers; evaluated exactly.
    IntegerLattice,
    // x a negative integer, y not an integer: Gamma(x+1) has a pole that no
    // denominator cancels, so the coefficient is infinite.
    NegativeIntXNonIntY,
    // Regular numerator with a denominator gamma at a pole: the coefficient
    // is 0. Arises off the lattice only, when y or x-y is a negative
    // integer and x is not an integer.
    DenominatorPoleZero,
    GammaRegular,
};

std::string_view to_string(PointClass c);

PointClass classify_point(Complex x, Complex y);

// Extended binomial coefficient C(x, y) = Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1))
// over the whole complex plane, with the lattice evaluated exactly and
// rendered to double. Throws OverflowError if the finite result exceeds
// double range.
ExtendedValue binom_complex(Complex x, Complex y);

// The exact side channel: engaged exactly when classify_point reports
// IntegerLattice.
std::optional<BigInt> binom_exact(Complex x, Complex y);

// Lattice point both arguments snap to, if any.
std::optional<LatticePoint> snap_lattice(Complex x, Complex y);

// Nearest double to an exact integer; throws OverflowError if out of range.
double to_double_checked(const BigInt& v);

}  // namespace xbinom
