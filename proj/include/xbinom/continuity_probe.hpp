#pragma once

#include "xbinom/binomial_eval.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace xbinom {

// Unit vector (dx, dy) in complex 2-space.
struct Direction {
    Complex dx{1.0, 0.0};
    Complex dy{};
};

// Normalizes (dx, dy). Throws DomainError for the zero vector.
Direction make_direction(Complex dx, Complex dy);

// The perturbation under which the lattice value is recovered: the diagonal
// (1,1)/sqrt(2) for k <= n < 0, where both x and y must move together, and
// the x axis (1,0) everywhere else.
Direction lattice_direction(LatticePoint p);

// 1e-2, 1e-3, ..., 1e-7
std::vector<double> default_deltas();

enum class ProbeClass { ConvergesToLattice, Diverges, Inconclusive };

std::string_view to_string(ProbeClass c);

// Accepted relative error at step delta: the perturbation error is O(delta).
inline double probe_tolerance(double delta) { return 100.0 * delta + 1e-10; }

struct ProbeSample {
    double delta = 0.0;
    // Empty when the sample point landed on the infinite set (a gap).
    std::optional<ExtendedValue> value;
    // |value - target| / max(1, |target|) for limit probes.
    std::optional<double> error;
};

struct ProbeResult {
    std::vector<ProbeSample> samples;
    std::optional<Complex> extrapolated_limit;
    ProbeClass classification = ProbeClass::Inconclusive;
    // Set by probe_limit.
    std::optional<BigInt> lattice_value;
    // Set by probe_divergence: |value| * delta at the last sample.
    std::optional<double> pole_strength;
};

// Samples C(n + delta dx, k + delta dy) for each delta (strictly decreasing,
// positive) and classifies the approach to C(n, k). Throws DomainError on
// malformed deltas or when every sample lands on the infinite set.
ProbeResult probe_limit(LatticePoint target, Direction direction, std::span<const double> deltas);

// Samples |C(x + delta, y)| at a point of the infinite set (x a negative
// integer, y not an integer) and reports Diverges when the magnitudes grow
// while |value| * delta holds steady to 10% over the last three samples.
// Throws DomainError if (x, y) is not on the infinite set.
ProbeResult probe_divergence(Complex x, Complex y, std::span<const double> deltas);

struct ScanEntry {
    Direction direction;
    ProbeClass classification = ProbeClass::Inconclusive;
    std::optional<Complex> extrapolated_limit;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    // Indices into entries of directions that did not converge to the
    // lattice value.
    std::vector<std::size_t> non_converging;
};

// Probes `count` seeded directions drawn uniformly from the unit sphere in
// complex 2-space. Throws DomainError for count == 0.
ScanReport direction_scan(LatticePoint target, std::size_t count, std::uint64_t seed,
                          std::span<const double> deltas);

}  // namespace xbinom
