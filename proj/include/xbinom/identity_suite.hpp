#pragma once

#include "xbinom/binomial_eval.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xbinom {

enum class Verdict { Holds, HoldsExact, KnownException, Violated };

std::string_view to_string(Verdict v);

// Residual bound for identities evaluated off the lattice.
inline constexpr double kIdentityTolerance = 1e-9;

// One side of an identity. exact is engaged when the side was evaluated on
// the lattice in exact arithmetic.
struct IdentitySide {
    ExtendedValue value = ExtendedValue::indeterminate();
    std::optional<BigInt> exact;

    static IdentitySide from_exact(BigInt v);
    static IdentitySide from_value(ExtendedValue v) { return {v, std::nullopt}; }
};

struct IdentityReport {
    std::string identity;
    std::vector<Complex> point;
    IdentitySide lhs;
    IdentitySide rhs;
    std::optional<double> residual;
    Verdict verdict = Verdict::Violated;
};

// |a - b| / max(1, |a|, |b|)
double identity_residual(Complex a, Complex b);

// C(x,y) = C(x, x-y)
IdentityReport check_symmetry(Complex x, Complex y, double tol = kIdentityTolerance);
// C(x,y) C(y,z) = C(x,z) C(x-z, y-z)
IdentityReport check_trinomial(Complex x, Complex y, Complex z, double tol = kIdentityTolerance);
// C(x,y) = (x/y) C(x-1, y-1); a known exception on y = 0.
IdentityReport check_absorption(Complex x, Complex y, double tol = kIdentityTolerance);
// C(x,y) = C(x-1,y) + C(x-1,y-1); a known exception at x = y = 0.
IdentityReport check_addition(Complex x, Complex y, double tol = kIdentityTolerance);

// With G = Gamma(x)/(Gamma(y)Gamma(x-y)), compares x/(y(x-y)) G against
// (1/y + 1/(x-y)) G, the gamma form of the addition identity after the
// common factor is divided out. Requires x, y, x-y off the poles.
IdentityReport check_addition_reduction(Complex x, Complex y, double tol = 1e-10);

// Tolerance for the perturbed negation forms: the left side is a ratio of
// two near-pole gammas, so roundoff grows like eps/|delta|.
double delta_form_tolerance(Complex delta);

// C(n+d, k) = (-1)^k C(-(n+d)+k-1, k) for n < 0 <= k.
IdentityReport check_delta_upper(std::int64_t n, std::int64_t k, Complex delta);
// C(n+d, k+d) = (-1)^(n-k) C(-(k+d)-1, n-k) for k <= n < 0.
IdentityReport check_delta_diagonal(std::int64_t n, std::int64_t k, Complex delta);
// Whichever of the two forms apply at (n, k). Throws DomainError if delta is
// zero, |delta| > 1e-2, or neither form applies.
std::vector<IdentityReport> check_delta_forms(std::int64_t n, std::int64_t k, Complex delta);

enum class Identity { Symmetry, Trinomial, Absorption, Addition, Delta };

std::string_view to_string(Identity id);
std::optional<Identity> identity_from_string(std::string_view name);
inline constexpr std::array<Identity, 5> kAllIdentities = {
    Identity::Symmetry, Identity::Trinomial, Identity::Absorption, Identity::Addition, Identity::Delta};

struct ComplexSampleSpec {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    // Real and imaginary parts drawn uniformly from [-box, box].
    double box = 7.0;
    // Minimum distance of every upper argument from the negative integers.
    double exclusion = 1e-3;
};

struct SweepSpec {
    std::optional<LatticeWindow> lattice;
    std::vector<Identity> identities{kAllIdentities.begin(), kAllIdentities.end()};
    ComplexSampleSpec samples;
    Complex delta{1e-6, 0.0};
    double tol = kIdentityTolerance;
};

// Runs the selected identities over the lattice window (trinomial over the
// full cube x, y, z in the window) and then over the seeded complex sample.
// Reports come out in generation order: identity, then point.
std::vector<IdentityReport> sweep(const SweepSpec& spec);

struct SweepSummary {
    // identity name -> counts indexed by Verdict
    std::map<std::string, std::array<std::size_t, 4>> counts;

    std::size_t total(Verdict v) const;
    std::size_t violated() const { return total(Verdict::Violated); }
};

SweepSummary summarize(const std::vector<IdentityReport>& reports);

// JSON object with fields identity, point, lhs, rhs, residual, verdict.
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const SweepSummary& summary);

}  // namespace xbinom
