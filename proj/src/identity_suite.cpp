#include "xbinom/identity_suite.hpp"

#include "xbinom/errors.hpp"
#include "xbinom/literals.hpp"
#include "xbinom/random.hpp"

#include <algorithm>
#include <cmath>

namespace xbinom {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::HoldsExact: return "HoldsExact";
    case Verdict::KnownException: return "KnownException";
    case Verdict::Violated: return "Violated";
    }
    return "?";
}

std::string_view to_string(Identity id)
{
    switch (id) {
    case Identity::Symmetry: return "symmetry";
    case Identity::Trinomial: return "trinomial";
    case Identity::Absorption: return "absorption";
    case Identity::Addition: return "addition";
    case Identity::Delta: return "delta";
    }
    return "?";
}

std::optional<Identity> identity_from_string(std::string_view name)
{
    for (Identity id : kAllIdentities) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

IdentitySide IdentitySide::from_exact(BigInt v)
{
    const double d = v.convert_to<double>();
    return {ExtendedValue::finite(d), std::move(v)};
}

double identity_residual(Complex a, Complex b)
{
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

void judge(IdentityReport& r, double tol)
{
    if (r.lhs.exact && r.rhs.exact) {
        const bool equal = *r.lhs.exact == *r.rhs.exact;
        r.residual = equal ? 0.0 : identity_residual(r.lhs.value.value(), r.rhs.value.value());
        r.verdict = equal ? Verdict::HoldsExact : Verdict::Violated;
        return;
    }
    const ExtendedValue& a = r.lhs.value;
    const ExtendedValue& b = r.rhs.value;
    if (a.is_indeterminate() || b.is_indeterminate()) {
        r.verdict = Verdict::KnownException;
        return;
    }
    if (a.is_infinite() || b.is_infinite()) {
        r.verdict = a.is_infinite() && b.is_infinite() ? Verdict::Holds : Verdict::Violated;
        return;
    }
    r.residual = identity_residual(a.value(), b.value());
    r.verdict = *r.residual <= tol ? Verdict::Holds : Verdict::Violated;
}

// Exact coefficient lookup, served from a precomputed table when one covers
// the cell.
class LatticeSource {
public:
    explicit LatticeSource(const LatticeTable* table = nullptr) : table_(table) {}

    BigInt operator()(std::int64_t n, std::int64_t k) const
    {
        if (table_ && table_->window().contains({n, k})) {
            return table_->at(n, k);
        }
        return binom_lattice(n, k);
    }

private:
    const LatticeTable* table_;
};

Complex as_complex(std::int64_t v) { return {static_cast<double>(v), 0.0}; }

IdentityReport lattice_symmetry(const LatticeSource& c, std::int64_t x, std::int64_t y)
{
    IdentityReport r{"symmetry", {as_complex(x), as_complex(y)}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = IdentitySide::from_exact(c(x, y));
    r.rhs = IdentitySide::from_exact(c(x, x - y));
    judge(r, 0.0);
    return r;
}

IdentityReport lattice_trinomial(const LatticeSource& c, std::int64_t x, std::int64_t y, std::int64_t z)
{
    IdentityReport r{"trinomial",
                     {as_complex(x), as_complex(y), as_complex(z)},
                     {},
                     {},
                     std::nullopt,
                     Verdict::Violated};
    r.lhs = IdentitySide::from_exact(c(x, y) * c(y, z));
    r.rhs = IdentitySide::from_exact(c(x, z) * c(x - z, y - z));
    judge(r, 0.0);
    return r;
}

IdentityReport lattice_absorption(const LatticeSource& c, std::int64_t x, std::int64_t y)
{
    IdentityReport r{"absorption", {as_complex(x), as_complex(y)}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = IdentitySide::from_exact(c(x, y));
    if (y == 0) {
        r.rhs = IdentitySide::from_value(ExtendedValue::indeterminate());
        r.verdict = Verdict::KnownException;
        return r;
    }
    const BigInt numerator = BigInt(x) * c(x - 1, y - 1);
    if (numerator % y == 0) {
        r.rhs = IdentitySide::from_exact(numerator / y);
        judge(r, 0.0);
    } else {
        r.rhs = IdentitySide::from_value(ExtendedValue::finite(numerator.convert_to<double>() / static_cast<double>(y)));
        r.residual = identity_residual(r.lhs.value.value(), r.rhs.value.value());
        r.verdict = Verdict::Violated;
    }
    return r;
}

IdentityReport lattice_addition(const LatticeSource& c, std::int64_t x, std::int64_t y)
{
    IdentityReport r{"addition", {as_complex(x), as_complex(y)}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = IdentitySide::from_exact(c(x, y));
    r.rhs = IdentitySide::from_exact(c(x - 1, y) + c(x - 1, y - 1));
    judge(r, 0.0);
    if (x == 0 && y == 0) {
        r.verdict = Verdict::KnownException;
    }
    return r;
}

IdentitySide complex_side(Complex x, Complex y) { return IdentitySide::from_value(binom_complex(x, y)); }

}  // namespace

IdentityReport check_symmetry(Complex x, Complex y, double tol)
{
    if (const auto p = snap_lattice(x, y)) {
        return lattice_symmetry(LatticeSource{}, p->n, p->k);
    }
    IdentityReport r{"symmetry", {x, y}, complex_side(x, y), complex_side(x, x - y), std::nullopt, Verdict::Violated};
    judge(r, tol);
    return r;
}

IdentityReport check_trinomial(Complex x, Complex y, Complex z, double tol)
{
    const auto nx = snap_integer(x);
    const auto ny = snap_integer(y);
    const auto nz = snap_integer(z);
    if (nx && ny && nz) {
        return lattice_trinomial(LatticeSource{}, *nx, *ny, *nz);
    }
    IdentityReport r{"trinomial", {x, y, z}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = IdentitySide::from_value(binom_complex(x, y) * binom_complex(y, z));
    r.rhs = IdentitySide::from_value(binom_complex(x, z) * binom_complex(x - z, y - z));
    judge(r, tol);
    return r;
}

IdentityReport check_absorption(Complex x, Complex y, double tol)
{
    if (const auto p = snap_lattice(x, y)) {
        return lattice_absorption(LatticeSource{}, p->n, p->k);
    }
    IdentityReport r{"absorption", {x, y}, complex_side(x, y), {}, std::nullopt, Verdict::Violated};
    const auto ky = snap_integer(y);
    if (ky && *ky == 0) {
        r.rhs = IdentitySide::from_value(ExtendedValue::indeterminate());
        r.verdict = Verdict::KnownException;
        return r;
    }
    r.rhs = IdentitySide::from_value(ExtendedValue::finite(x / y) * binom_complex(x - 1.0, y - 1.0));
    judge(r, tol);
    return r;
}

IdentityReport check_addition(Complex x, Complex y, double tol)
{
    if (const auto p = snap_lattice(x, y)) {
        return lattice_addition(LatticeSource{}, p->n, p->k);
    }
    IdentityReport r{"addition", {x, y}, complex_side(x, y), {}, std::nullopt, Verdict::Violated};
    r.rhs = IdentitySide::from_value(binom_complex(x - 1.0, y) + binom_complex(x - 1.0, y - 1.0));
    judge(r, tol);
    return r;
}

IdentityReport check_addition_reduction(Complex x, Complex y, double tol)
{
    const Complex d = x - y;
    if (is_nonpositive_integer(x) || is_nonpositive_integer(y) || is_nonpositive_integer(d)) {
        throw DomainError("addition reduction needs x, y, x-y off the gamma poles");
    }
    const Complex g = std::exp(log_gamma_raw(x) - log_gamma_raw(y) - log_gamma_raw(d));
    IdentityReport r{"addition_reduction", {x, y}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = IdentitySide::from_value(ExtendedValue::finite(x / (y * d) * g));
    r.rhs = IdentitySide::from_value(ExtendedValue::finite((1.0 / y + 1.0 / d) * g));
    judge(r, tol);
    return r;
}

double delta_form_tolerance(Complex delta) { return 1e-10 + 1e-14 / std::abs(delta); }

namespace {

void require_small_delta(Complex delta)
{
    const double m = std::abs(delta);
    if (m == 0.0 || m > 1e-2) {
        throw DomainError("delta must satisfy 0 < |delta| <= 1e-2");
    }
}

}  // namespace

IdentityReport check_delta_upper(std::int64_t n, std::int64_t k, Complex delta)
{
    require_small_delta(delta);
    if (!(n < 0 && k >= 0)) {
        throw DomainError("upper-perturbed negation form needs n < 0 <= k");
    }
    const Complex x = as_complex(n) + delta;
    const Complex kk = as_complex(k);
    IdentityReport r{"delta_upper", {as_complex(n), kk, delta}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = complex_side(x, kk);
    const ExtendedValue sign = ExtendedValue::finite(is_odd(k) ? -1.0 : 1.0);
    r.rhs = IdentitySide::from_value(sign * binom_complex(-x + kk - 1.0, kk));
    judge(r, delta_form_tolerance(delta));
    return r;
}

IdentityReport check_delta_diagonal(std::int64_t n, std::int64_t k, Complex delta)
{
    require_small_delta(delta);
    if (!(k <= n && n < 0)) {
        throw DomainError("diagonally perturbed negation form needs k <= n < 0");
    }
    const Complex x = as_complex(n) + delta;
    const Complex y = as_complex(k) + delta;
    IdentityReport r{"delta_diagonal", {as_complex(n), as_complex(k), delta}, {}, {}, std::nullopt, Verdict::Violated};
    r.lhs = complex_side(x, y);
    const ExtendedValue sign = ExtendedValue::finite(is_odd(n - k) ? -1.0 : 1.0);
    r.rhs = IdentitySide::from_value(sign * binom_complex(-y - 1.0, as_complex(n - k)));
    judge(r, delta_form_tolerance(delta));
    return r;
}

std::vector<IdentityReport> check_delta_forms(std::int64_t n, std::int64_t k, Complex delta)
{
    require_small_delta(delta);
    std::vector<IdentityReport> out;
    if (n < 0 && k >= 0) {
        out.push_back(check_delta_upper(n, k, delta));
    }
    if (k <= n && n < 0) {
        out.push_back(check_delta_diagonal(n, k, delta));
    }
    if (out.empty()) {
        throw DomainError("no perturbed negation form applies at this lattice point");
    }
    return out;
}

namespace {

bool near_negative_integer(Complex s, double radius)
{
    const double m = std::min(std::round(s.real()), -1.0);
    return std::abs(s - Complex{m, 0.0}) < radius;
}

struct Triple {
    Complex x, y, z;
};

std::vector<Triple> draw_samples(const ComplexSampleSpec& spec)
{
    SampleRng rng(spec.seed);
    auto draw = [&] { return Complex{rng.uniform(-spec.box, spec.box), rng.uniform(-spec.box, spec.box)}; };
    std::vector<Triple> out;
    out.reserve(spec.count);
    while (out.size() < spec.count) {
        const Triple t{draw(), draw(), draw()};
        const bool rejected = near_negative_integer(t.x, spec.exclusion) ||
                              near_negative_integer(t.x - 1.0, spec.exclusion) ||
                              near_negative_integer(t.y, spec.exclusion) ||
                              near_negative_integer(t.x - t.z, spec.exclusion);
        if (!rejected) {
            out.push_back(t);
        }
    }
    return out;
}

// Window covering every coefficient the lattice sweep touches.
LatticeWindow cache_window(const LatticeWindow& w)
{
    const std::int64_t lo = std::min({w.n_min, w.k_min, w.n_min - w.k_max, w.k_min - w.k_max}) - 1;
    const std::int64_t hi = std::max({w.n_max, w.k_max, w.n_max - w.k_min, w.k_max - w.k_min});
    return LatticeWindow::square(lo, hi);
}

}  // namespace

std::vector<IdentityReport> sweep(const SweepSpec& spec)
{
    std::vector<IdentityReport> out;

    if (spec.lattice && !spec.lattice->empty()) {
        const LatticeWindow& w = *spec.lattice;
        const LatticeTable table = make_lattice_table(cache_window(w));
        const LatticeSource c(&table);
        for (Identity id : spec.identities) {
            for (std::int64_t n = w.n_min; n <= w.n_max; ++n) {
                for (std::int64_t k = w.k_min; k <= w.k_max; ++k) {
                    switch (id) {
                    case Identity::Symmetry: out.push_back(lattice_symmetry(c, n, k)); break;
                    case Identity::Absorption: out.push_back(lattice_absorption(c, n, k)); break;
                    case Identity::Addition: out.push_back(lattice_addition(c, n, k)); break;
                    case Identity::Trinomial:
                        for (std::int64_t z = w.k_min; z <= w.k_max; ++z) {
                            out.push_back(lattice_trinomial(c, n, k, z));
                        }
                        break;
                    case Identity::Delta:
                        if (n < 0 && (k >= 0 || k <= n)) {
                            for (auto& r : check_delta_forms(n, k, spec.delta)) {
                                out.push_back(std::move(r));
                            }
                        }
                        break;
                    }
                }
            }
        }
    }

    if (spec.samples.count > 0) {
        const auto samples = draw_samples(spec.samples);
        for (Identity id : spec.identities) {
            for (const Triple& t : samples) {
                switch (id) {
                case Identity::Symmetry: out.push_back(check_symmetry(t.x, t.y, spec.tol)); break;
                case Identity::Trinomial: out.push_back(check_trinomial(t.x, t.y, t.z, spec.tol)); break;
                case Identity::Absorption: out.push_back(check_absorption(t.x, t.y, spec.tol)); break;
                case Identity::Addition: out.push_back(check_addition(t.x, t.y, spec.tol)); break;
                case Identity::Delta: break;  // lattice only
                }
            }
        }
    }
    return out;
}

std::size_t SweepSummary::total(Verdict v) const
{
    std::size_t n = 0;
    for (const auto& [name, c] : counts) {
        n += c[static_cast<std::size_t>(v)];
    }
    return n;
}

SweepSummary summarize(const std::vector<IdentityReport>& reports)
{
    SweepSummary s;
    for (const auto& r : reports) {
        s.counts[r.identity][static_cast<std::size_t>(r.verdict)] += 1;
    }
    return s;
}

namespace {

std::string side_text(const IdentitySide& side)
{
    return side.exact ? side.exact->str() : format_value(side.value);
}

}  // namespace

nlohmann::json to_json(const IdentityReport& report)
{
    nlohmann::json point = nlohmann::json::array();
    for (const Complex& v : report.point) {
        point.push_back(format_complex(v));
    }
    nlohmann::json j;
    j["identity"] = report.identity;
    j["point"] = std::move(point);
    j["lhs"] = side_text(report.lhs);
    j["rhs"] = side_text(report.rhs);
    j["residual"] = report.residual ? nlohmann::json(*report.residual) : nlohmann::json(nullptr);
    j["verdict"] = std::string(to_string(report.verdict));
    return j;
}

nlohmann::json to_json(const SweepSummary& summary)
{
    nlohmann::json by_identity = nlohmann::json::object();
    for (const auto& [name, c] : summary.counts) {
        nlohmann::json row;
        for (Verdict v : {Verdict::Holds, Verdict::HoldsExact, Verdict::KnownException, Verdict::Violated}) {
            row[std::string(to_string(v))] = c[static_cast<std::size_t>(v)];
        }
        by_identity[name] = std::move(row);
    }
    nlohmann::json j;
    j["by_identity"] = std::move(by_identity);
    j["violated"] = summary.violated();
    j["known_exceptions"] = summary.total(Verdict::KnownException);
    j["reports"] = summary.total(Verdict::Holds) + summary.total(Verdict::HoldsExact) +
                   summary.total(Verdict::KnownException) + summary.violated();
    return j;
}

}  // namespace xbinom
