#include "xbinom/continuity_probe.hpp"

#include "xbinom/errors.hpp"
#include "xbinom/random.hpp"

#include <algorithm>
#include <cmath>

namespace xbinom {

Direction make_direction(Complex dx, Complex dy)
{
    const double norm = std::sqrt(std::norm(dx) + std::norm(dy));
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw DomainError("probe direction must be a nonzero finite vector");
    }
    return {dx / norm, dy / norm};
}

Direction lattice_direction(LatticePoint p)
{
    if (p.k <= p.n && p.n < 0) {
        return make_direction(1.0, 1.0);
    }
    return {Complex{1.0, 0.0}, Complex{}};
}

std::vector<double> default_deltas() { return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}; }

std::string_view to_string(ProbeClass c)
{
    switch (c) {
    case ProbeClass::ConvergesToLattice: return "ConvergesToLattice";
    case ProbeClass::Diverges: return "Diverges";
    case ProbeClass::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

void validate_deltas(std::span<const double> deltas)
{
    if (deltas.empty()) {
        throw DomainError("probe needs at least one delta");
    }
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0) || !std::isfinite(deltas[i])) {
            throw DomainError("probe deltas must be positive");
        }
        if (i > 0 && !(deltas[i] < deltas[i - 1])) {
            throw DomainError("probe deltas must be strictly decreasing");
        }
    }
}

void validate_direction(const Direction& d)
{
    const double norm = std::sqrt(std::norm(d.dx) + std::norm(d.dy));
    if (std::abs(norm - 1.0) > 1e-12) {
        throw DomainError("probe direction must have unit norm");
    }
}

// Indices of samples carrying a finite value, oldest first.
std::vector<std::size_t> finite_samples(const std::vector<ProbeSample>& samples)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].value && samples[i].value->is_finite()) {
            idx.push_back(i);
        }
    }
    return idx;
}

bool magnitudes_growing(const std::vector<ProbeSample>& samples, const std::vector<std::size_t>& idx)
{
    if (idx.size() < 3) {
        return false;
    }
    for (std::size_t j = idx.size() - 2; j < idx.size(); ++j) {
        if (!(std::abs(samples[idx[j]].value->value()) > 2.0 * std::abs(samples[idx[j - 1]].value->value()))) {
            return false;
        }
    }
    return true;
}

}  // namespace

ProbeResult probe_limit(LatticePoint target, Direction direction, std::span<const double> deltas)
{
    validate_deltas(deltas);
    validate_direction(direction);

    ProbeResult result;
    result.lattice_value = binom_lattice(target);
    const double target_value = to_double_checked(*result.lattice_value);
    const double scale = std::max(1.0, std::abs(target_value));
    const Complex x0{static_cast<double>(target.n), 0.0};
    const Complex y0{static_cast<double>(target.k), 0.0};

    for (double delta : deltas) {
        ProbeSample s{delta, std::nullopt, std::nullopt};
        const Complex x = x0 + delta * direction.dx;
        const Complex y = y0 + delta * direction.dy;
        if (classify_point(x, y) != PointClass::NegativeIntXNonIntY) {
            s.value = binom_complex(x, y);
            s.error = std::abs(s.value->value() - target_value) / scale;
        }
        result.samples.push_back(s);
    }

    const auto idx = finite_samples(result.samples);
    if (idx.empty()) {
        throw DomainError("every probe sample lies on the infinite set; use probe_divergence");
    }

    if (idx.size() >= 2) {
        const ProbeSample& a = result.samples[idx[idx.size() - 2]];
        const ProbeSample& b = result.samples[idx.back()];
        result.extrapolated_limit =
            (a.delta * b.value->value() - b.delta * a.value->value()) / (a.delta - b.delta);
    }

    auto within = [](const ProbeSample& s) { return *s.error <= probe_tolerance(s.delta); };
    bool converges = false;
    if (idx.size() >= 2) {
        const ProbeSample& a = result.samples[idx[idx.size() - 2]];
        const ProbeSample& b = result.samples[idx.back()];
        converges = within(a) && within(b) && (*b.error <= *a.error || *b.error <= 1e-12);
    } else {
        converges = within(result.samples[idx.front()]);
    }

    if (converges) {
        result.classification = ProbeClass::ConvergesToLattice;
    } else if (magnitudes_growing(result.samples, idx)) {
        result.classification = ProbeClass::Diverges;
    }
    return result;
}

ProbeResult probe_divergence(Complex x, Complex y, std::span<const double> deltas)
{
    validate_deltas(deltas);
    const auto n = snap_integer(x);
    if (!n || *n >= 0) {
        throw DomainError("probe_divergence needs x at a negative integer");
    }
    if (snap_integer(y)) {
        throw DomainError("probe_divergence needs y off the integers");
    }

    ProbeResult result;
    const Complex x0{static_cast<double>(*n), 0.0};
    for (double delta : deltas) {
        result.samples.push_back({delta, binom_complex(x0 + delta, y), std::nullopt});
    }

    const auto idx = finite_samples(result.samples);
    if (idx.empty()) {
        return result;
    }
    const ProbeSample& last = result.samples[idx.back()];
    result.pole_strength = std::abs(last.value->value()) * last.delta;

    if (idx.size() < 3 || !magnitudes_growing(result.samples, idx)) {
        return result;
    }
    double lo = *result.pole_strength;
    double hi = lo;
    for (std::size_t j = idx.size() - 3; j < idx.size(); ++j) {
        const ProbeSample& s = result.samples[idx[j]];
        const double strength = std::abs(s.value->value()) * s.delta;
        lo = std::min(lo, strength);
        hi = std::max(hi, strength);
    }
    if (hi > 0.0 && (hi - lo) / hi < 0.1) {
        result.classification = ProbeClass::Diverges;
    }
    return result;
}

ScanReport direction_scan(LatticePoint target, std::size_t count, std::uint64_t seed,
                          std::span<const double> deltas)
{
    if (count == 0) {
        throw DomainError("direction_scan needs count >= 1");
    }
    SampleRng rng(seed);
    ScanReport report;
    for (std::size_t i = 0; i < count; ++i) {
        const double a = rng.normal();
        const double b = rng.normal();
        const double c = rng.normal();
        const double d = rng.normal();
        ScanEntry entry{make_direction({a, b}, {c, d}), ProbeClass::Inconclusive, std::nullopt};
        try {
            const ProbeResult r = probe_limit(target, entry.direction, deltas);
            entry.classification = r.classification;
            entry.extrapolated_limit = r.extrapolated_limit;
        } catch (const DomainError&) {
            // every sample on the infinite set
        }
        if (entry.classification != ProbeClass::ConvergesToLattice) {
            report.non_converging.push_back(i);
        }
        report.entries.push_back(entry);
    }
    return report;
}

}  // namespace xbinom
