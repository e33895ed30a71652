#include "xbinom/cli.hpp"

#include "xbinom/binomial_eval.hpp"
#include "xbinom/continuity_probe.hpp"
#include "xbinom/errors.hpp"
#include "xbinom/identity_suite.hpp"
#include "xbinom/literals.hpp"
#include "xbinom/series_expansion.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <ostream>

namespace xbinom::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Csv, Json };

struct Context {
    Format format = Format::Text;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::ostream& out;
    std::ostream& err;
};

json ok_record(std::string_view command, json inputs, json result)
{
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["status"] = "ok";
    j["result"] = std::move(result);
    return j;
}

int exit_code_for(const Error& e)
{
    if (dynamic_cast<const OverflowError*>(&e) != nullptr) {
        return kOverflow;
    }
    if (dynamic_cast<const NonConvergentRegionError*>(&e) != nullptr) {
        return kNonConvergent;
    }
    return kUsage;
}

int report_error(const Context& ctx, std::string_view command, const json& inputs, const Error& e)
{
    if (ctx.format == Format::Json) {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["status"] = "error";
        j["error_kind"] = e.kind();
        j["message"] = e.what();
        ctx.out << j.dump() << '\n';
    } else {
        ctx.err << "error: " << e.kind() << ": " << e.what() << '\n';
    }
    return exit_code_for(e);
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
    std::string x;
    std::string y;
};

int cmd_eval(const Context& ctx, const EvalArgs& a)
{
    const json inputs = {{"x", a.x}, {"y", a.y}};
    try {
        const Complex x = parse_complex(a.x);
        const Complex y = parse_complex(a.y);
        const PointClass cls = classify_point(x, y);
        std::string value;
        if (const auto exact = binom_exact(x, y)) {
            value = exact->str();
        } else {
            value = format_value(binom_complex(x, y));
        }
        switch (ctx.format) {
        case Format::Text: ctx.out << value << '\n'; break;
        case Format::Csv: ctx.out << "x,y,value\n" << a.x << ',' << a.y << ',' << value << '\n'; break;
        case Format::Json: {
            const json result = {{"class", to_string(cls)},
                                 {"value", value},
                                 {"exact", cls == PointClass::IntegerLattice}};
            ctx.out << ok_record("eval", inputs, result).dump() << '\n';
            break;
        }
        }
        return kOk;
    } catch (const Error& e) {
        return report_error(ctx, "eval", inputs, e);
    }
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
    std::string n_min, n_max, k_min, k_max;
};

int cmd_table(const Context& ctx, const TableArgs& a)
{
    const json inputs = {{"n_min", a.n_min}, {"n_max", a.n_max}, {"k_min", a.k_min}, {"k_max", a.k_max}};
    try {
        const LatticeWindow w{parse_integer(a.n_min), parse_integer(a.n_max), parse_integer(a.k_min),
                              parse_integer(a.k_max)};
        if (w.n_min > w.n_max || w.k_min > w.k_max) {
            throw DomainError("table window is empty: need n_min <= n_max and k_min <= k_max");
        }
        const long double cells = (static_cast<long double>(w.n_max) - w.n_min + 1) *
                                  (static_cast<long double>(w.k_max) - w.k_min + 1);
        if (cells > static_cast<long double>(kMaxTableCells)) {
            throw DomainError(fmt::format("table window exceeds {} cells", kMaxTableCells));
        }
        if (ctx.format == Format::Json) {
            json rows = json::array();
            for (std::int64_t n = w.n_min; n <= w.n_max; ++n) {
                for (std::int64_t k = w.k_min; k <= w.k_max; ++k) {
                    rows.push_back({{"n", n}, {"k", k}, {"value", binom_lattice(n, k).str()}});
                }
            }
            ctx.out << ok_record("table", inputs, {{"cells", std::move(rows)}}).dump() << '\n';
        } else {
            ctx.out << "n,k,value\n";
            for (std::int64_t n = w.n_min; n <= w.n_max; ++n) {
                for (std::int64_t k = w.k_min; k <= w.k_max; ++k) {
                    ctx.out << n << ',' << k << ',' << binom_lattice(n, k).str() << '\n';
                }
            }
        }
        return kOk;
    } catch (const Error& e) {
        return report_error(ctx, "table", inputs, e);
    }
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string identity;
    std::vector<std::string> window;
    std::vector<std::string> at;
    std::size_t samples = 0;
    std::string delta = "1e-6";
};

std::vector<IdentityReport> reports_at_point(const std::string& name, const std::vector<Complex>& p,
                                             Complex delta, double tol)
{
    const auto want = [&](Identity id) { return name == "all" || name == to_string(id); };
    const auto need = [&](std::size_t count, Identity id) {
        if (name != "all" && p.size() != count) {
            throw ParseError(fmt::format("--at for {} takes {} values", to_string(id), count));
        }
    };
    if (p.size() < 2 || p.size() > 3) {
        throw ParseError("--at takes 2 or 3 values");
    }

    std::vector<IdentityReport> out;
    if (want(Identity::Symmetry)) {
        need(2, Identity::Symmetry);
        out.push_back(check_symmetry(p[0], p[1], tol));
    }
    if (want(Identity::Trinomial)) {
        need(3, Identity::Trinomial);
        if (p.size() == 3) {
            out.push_back(check_trinomial(p[0], p[1], p[2], tol));
        }
    }
    if (want(Identity::Absorption)) {
        need(2, Identity::Absorption);
        out.push_back(check_absorption(p[0], p[1], tol));
    }
    if (want(Identity::Addition)) {
        need(2, Identity::Addition);
        out.push_back(check_addition(p[0], p[1], tol));
    }
    if (want(Identity::Delta)) {
        need(2, Identity::Delta);
        const auto n = snap_integer(p[0]);
        const auto k = snap_integer(p[1]);
        const bool applies = n && k && *n < 0 && (*k >= 0 || *k <= *n);
        if (applies) {
            for (auto& r : check_delta_forms(*n, *k, delta)) {
                out.push_back(std::move(r));
            }
        } else if (name != "all") {
            throw DomainError("perturbed negation forms need integers n < 0 with k >= 0 or k <= n");
        }
    }
    return out;
}

std::string csv_point(const IdentityReport& r)
{
    std::string s;
    for (std::size_t i = 0; i < r.point.size(); ++i) {
        s += (i ? ";" : "") + format_complex(r.point[i]);
    }
    return s;
}

int cmd_verify(const Context& ctx, const VerifyArgs& a)
{
    json inputs = {{"identity", a.identity}, {"samples", a.samples}, {"seed", ctx.seed}, {"delta", a.delta}};
    if (!a.window.empty()) {
        inputs["window"] = a.window;
    }
    if (!a.at.empty()) {
        inputs["at"] = a.at;
    }
    try {
        if (a.identity != "all" && !identity_from_string(a.identity)) {
            throw ParseError(fmt::format("unknown identity '{}'", a.identity));
        }
        const double tol = ctx.tol.value_or(kIdentityTolerance);
        const Complex delta = parse_complex(a.delta);

        std::vector<IdentityReport> reports;
        if (!a.at.empty()) {
            std::vector<Complex> p;
            for (const auto& s : a.at) {
                p.push_back(parse_complex(s));
            }
            reports = reports_at_point(a.identity, p, delta, tol);
        } else {
            SweepSpec spec;
            if (a.identity != "all") {
                spec.identities = {*identity_from_string(a.identity)};
            }
            if (!a.window.empty()) {
                spec.lattice = LatticeWindow::square(parse_integer(a.window[0]), parse_integer(a.window[1]));
                if (spec.lattice->empty()) {
                    throw DomainError("verify window is empty");
                }
            } else if (a.samples == 0) {
                spec.lattice = LatticeWindow::square(-16, 16);
            }
            spec.samples = {a.samples, ctx.seed};
            spec.delta = delta;
            spec.tol = tol;
            reports = sweep(spec);
        }

        const SweepSummary summary = summarize(reports);
        switch (ctx.format) {
        case Format::Json:
            for (const auto& r : reports) {
                ctx.out << to_json(r).dump() << '\n';
            }
            ctx.out << ok_record("verify", inputs, to_json(summary)).dump() << '\n';
            break;
        case Format::Csv:
            ctx.out << "identity,point,lhs,rhs,residual,verdict\n";
            for (const auto& r : reports) {
                const json j = to_json(r);
                ctx.out << r.identity << ',' << csv_point(r) << ',' << j["lhs"].get<std::string>() << ','
                        << j["rhs"].get<std::string>() << ',' << (r.residual ? fmt::format("{:.6g}", *r.residual) : "")
                        << ',' << to_string(r.verdict) << '\n';
            }
            break;
        case Format::Text:
            // Passing reports are summarized only.
            for (const auto& r : reports) {
                if (r.verdict == Verdict::KnownException || r.verdict == Verdict::Violated) {
                    const json j = to_json(r);
                    ctx.out << r.identity << " (" << csv_point(r) << ") " << to_string(r.verdict)
                            << " lhs=" << j["lhs"].get<std::string>() << " rhs=" << j["rhs"].get<std::string>()
                            << '\n';
                }
            }
            for (const auto& [name, c] : summary.counts) {
                ctx.out << name << ": holds=" << c[0] << " holds_exact=" << c[1] << " known_exception=" << c[2]
                        << " violated=" << c[3] << '\n';
            }
            ctx.out << "violated " << summary.violated() << '\n';
            break;
        }
        return summary.violated() == 0 ? kOk : kViolated;
    } catch (const Error& e) {
        return report_error(ctx, "verify", inputs, e);
    }
}

// ---- expand --------------------------------------------------------------

struct ExpandArgs {
    std::string n;
    std::string x;
    std::string y;
    std::int64_t max_terms = 1'000'000;
};

int cmd_expand(const Context& ctx, const ExpandArgs& a)
{
    const json inputs = {{"n", a.n}, {"x", a.x}, {"y", a.y}, {"max_terms", a.max_terms}};
    try {
        SeriesSpec spec;
        spec.n = parse_integer(a.n);
        spec.x = parse_complex(a.x);
        spec.y = parse_complex(a.y);
        spec.rel_tol = ctx.tol.value_or(1e-12);
        spec.max_terms = a.max_terms;
        const SeriesResult r = expand(spec);
        const std::string value = format_complex(r.value);
        switch (ctx.format) {
        case Format::Text:
            ctx.out << "value " << value << "\nregime " << to_string(r.regime) << "\nterms_used " << r.terms_used
                    << "\nconverged " << (r.converged ? "true" : "false") << "\ntail_bound "
                    << format_real(r.tail_bound) << '\n';
            break;
        case Format::Csv:
            ctx.out << "value,regime,terms_used,converged,tail_bound\n"
                    << value << ',' << to_string(r.regime) << ',' << r.terms_used << ','
                    << (r.converged ? "true" : "false") << ',' << format_real(r.tail_bound) << '\n';
            break;
        case Format::Json: {
            const json result = {{"value", value},
                                 {"regime", to_string(r.regime)},
                                 {"terms_used", r.terms_used},
                                 {"converged", r.converged},
                                 {"tail_bound", format_real(r.tail_bound)}};
            ctx.out << ok_record("expand", inputs, result).dump() << '\n';
            break;
        }
        }
        return r.converged ? kOk : kNonConvergent;
    } catch (const Error& e) {
        return report_error(ctx, "expand", inputs, e);
    }
}

// ---- probe ---------------------------------------------------------------

struct ProbeArgs {
    std::vector<std::string> target;
    std::vector<std::string> dir;
    std::vector<std::string> diverge;
    std::vector<std::string> deltas;
    std::size_t scan = 0;
};

json samples_json(const ProbeResult& r)
{
    json rows = json::array();
    for (const auto& s : r.samples) {
        rows.push_back({{"delta", format_real(s.delta)},
                        {"value", s.value ? format_value(*s.value) : "gap"},
                        {"error", s.error ? json(format_real(*s.error)) : json(nullptr)}});
    }
    return rows;
}

int cmd_probe(const Context& ctx, const ProbeArgs& a)
{
    json inputs = json::object();
    if (!a.target.empty()) inputs["target"] = a.target;
    if (!a.dir.empty()) inputs["dir"] = a.dir;
    if (!a.diverge.empty()) inputs["diverge"] = a.diverge;
    if (!a.deltas.empty()) inputs["deltas"] = a.deltas;
    if (a.scan != 0) inputs["scan"] = a.scan;
    try {
        if (a.target.empty() == a.diverge.empty()) {
            throw ParseError("probe needs exactly one of --target or --diverge");
        }
        std::vector<double> deltas;
        for (const auto& s : a.deltas) {
            const Complex d = parse_complex(s);
            if (d.imag() != 0.0) {
                throw ParseError("probe deltas must be real");
            }
            deltas.push_back(d.real());
        }
        if (deltas.empty()) {
            deltas = default_deltas();
        }

        if (!a.diverge.empty()) {
            const ProbeResult r = probe_divergence(parse_complex(a.diverge[0]), parse_complex(a.diverge[1]), deltas);
            const std::string strength = r.pole_strength ? format_real(*r.pole_strength) : "";
            switch (ctx.format) {
            case Format::Text:
                for (const auto& s : r.samples) {
                    ctx.out << "delta " << format_real(s.delta) << " value " << format_value(*s.value) << '\n';
                }
                ctx.out << "classification " << to_string(r.classification) << "\npole_strength " << strength
                        << '\n';
                break;
            case Format::Csv:
                ctx.out << "delta,value,error\n";
                for (const auto& s : r.samples) {
                    ctx.out << format_real(s.delta) << ',' << format_value(*s.value) << ",\n";
                }
                break;
            case Format::Json: {
                const json result = {{"samples", samples_json(r)},
                                     {"classification", to_string(r.classification)},
                                     {"pole_strength", strength}};
                ctx.out << ok_record("probe", inputs, result).dump() << '\n';
                break;
            }
            }
            return kOk;
        }

        const LatticePoint target{parse_integer(a.target[0]), parse_integer(a.target[1])};

        if (a.scan != 0) {
            const ScanReport scan = direction_scan(target, a.scan, ctx.seed, deltas);
            auto limit_text = [](const ScanEntry& e) {
                return e.extrapolated_limit ? format_complex(*e.extrapolated_limit) : std::string{};
            };
            switch (ctx.format) {
            case Format::Text:
                for (const auto& e : scan.entries) {
                    ctx.out << "dir " << format_complex(e.direction.dx) << ' ' << format_complex(e.direction.dy)
                            << ' ' << to_string(e.classification) << " limit " << limit_text(e) << '\n';
                }
                ctx.out << "converging " << scan.entries.size() - scan.non_converging.size() << "\nnon_converging "
                        << scan.non_converging.size() << '\n';
                break;
            case Format::Csv:
                ctx.out << "index,dx,dy,classification,limit\n";
                for (std::size_t i = 0; i < scan.entries.size(); ++i) {
                    const auto& e = scan.entries[i];
                    ctx.out << i << ',' << format_complex(e.direction.dx) << ',' << format_complex(e.direction.dy)
                            << ',' << to_string(e.classification) << ',' << limit_text(e) << '\n';
                }
                break;
            case Format::Json: {
                json rows = json::array();
                for (const auto& e : scan.entries) {
                    rows.push_back({{"dx", format_complex(e.direction.dx)},
                                    {"dy", format_complex(e.direction.dy)},
                                    {"classification", to_string(e.classification)},
                                    {"limit", limit_text(e)}});
                }
                const json result = {{"directions", std::move(rows)}, {"non_converging", scan.non_converging}};
                ctx.out << ok_record("probe", inputs, result).dump() << '\n';
                break;
            }
            }
            return kOk;
        }

        const Direction dir = a.dir.empty() ? lattice_direction(target)
                                            : make_direction(parse_complex(a.dir[0]), parse_complex(a.dir[1]));
        const ProbeResult r = probe_limit(target, dir, deltas);
        const std::string lattice = r.lattice_value->str();
        const std::string extrapolated = r.extrapolated_limit ? format_complex(*r.extrapolated_limit) : "";
        switch (ctx.format) {
        case Format::Text:
            for (const auto& s : r.samples) {
                ctx.out << "delta " << format_real(s.delta) << " value "
                        << (s.value ? format_value(*s.value) : "gap") << " error "
                        << (s.error ? format_real(*s.error) : "") << '\n';
            }
            ctx.out << "classification " << to_string(r.classification) << "\nlattice_value " << lattice
                    << "\nextrapolated " << extrapolated << '\n';
            break;
        case Format::Csv:
            ctx.out << "delta,value,error\n";
            for (const auto& s : r.samples) {
                ctx.out << format_real(s.delta) << ',' << (s.value ? format_value(*s.value) : "gap") << ','
                        << (s.error ? format_real(*s.error) : "") << '\n';
            }
            break;
        case Format::Json: {
            const json result = {{"samples", samples_json(r)},
                                 {"classification", to_string(r.classification)},
                                 {"lattice_value", lattice},
                                 {"direction", {format_complex(dir.dx), format_complex(dir.dy)}},
                                 {"extrapolated", extrapolated}};
            ctx.out << ok_record("probe", inputs, result).dump() << '\n';
            break;
        }
        }
        return kOk;
    } catch (const Error& e) {
        return report_error(ctx, "probe", inputs, e);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Binomial coefficients extended to all integer and complex arguments", "xbinom"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::uint64_t seed = 1;
    std::optional<double> tol;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--seed", seed, "Seed for sampled sweeps and direction scans");
    app.add_option("--tol", tol, "Identity tolerance (verify) or series rel_tol (expand)");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate C(x, y)");
    eval->add_option("x", eval_args.x, "Upper argument, e.g. -4, 0.5, 1+2i")->required();
    eval->add_option("y", eval_args.y, "Lower argument")->required();

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Emit the extended Pascal plane over a window");
    table->add_option("n_min", table_args.n_min)->required();
    table->add_option("n_max", table_args.n_max)->required();
    table->add_option("k_min", table_args.k_min)->required();
    table->add_option("k_max", table_args.k_max)->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check the classical identities");
    verify->add_option("identity", verify_args.identity, "symmetry|trinomial|absorption|addition|delta|all")
        ->required();
    verify->add_option("--window", verify_args.window, "Square lattice window LO HI")->expected(2);
    verify->add_option("--at", verify_args.at, "Single point X Y [Z]")->expected(2, 3);
    verify->add_option("--samples", verify_args.samples, "Seeded complex sample count");
    verify->add_option("--delta", verify_args.delta, "Perturbation for the delta forms");

    ExpandArgs expand_args;
    auto* expand_cmd = app.add_subcommand("expand", "Evaluate (x+y)^n by the binomial theorem");
    expand_cmd->add_option("n", expand_args.n)->required();
    expand_cmd->add_option("x", expand_args.x)->required();
    expand_cmd->add_option("y", expand_args.y)->required();
    expand_cmd->add_option("--max-terms", expand_args.max_terms);

    ProbeArgs probe_args;
    auto* probe = app.add_subcommand("probe", "Probe limits toward lattice points or divergence");
    probe->add_option("--target", probe_args.target, "Lattice point N K")->expected(2);
    probe->add_option("--dir", probe_args.dir, "Direction DX DY")->expected(2);
    probe->add_option("--diverge", probe_args.diverge, "Point X Y of the infinite set")->expected(2);
    probe->add_option("--deltas", probe_args.deltas, "Decreasing step sizes")->delimiter(',');
    probe->add_option("--scan", probe_args.scan, "Number of seeded directions to scan");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        const bool json_requested =
            std::find(args.begin(), args.end(), "--format=json") != args.end() ||
            std::adjacent_find(args.begin(), args.end(), [](const std::string& a, const std::string& b) {
                return a == "--format" && b == "json";
            }) != args.end();
        if (json_requested) {
            json command = nullptr;
            for (const auto& a : args) {
                if (a == "eval" || a == "table" || a == "verify" || a == "expand" || a == "probe") {
                    command = a;
                    break;
                }
            }
            const json j = {{"command", command},
                            {"inputs", args},
                            {"status", "error"},
                            {"error_kind", "Usage"},
                            {"message", e.what()}};
            out << j.dump() << '\n';
        } else {
            err << "error: " << e.what() << '\n';
        }
        return kUsage;
    }

    const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    const Context ctx{fmt, seed, tol, out, err};
    if (*eval) return cmd_eval(ctx, eval_args);
    if (*table) return cmd_table(ctx, table_args);
    if (*verify) return cmd_verify(ctx, verify_args);
    if (*expand_cmd) return cmd_expand(ctx, expand_args);
    if (*probe) return cmd_probe(ctx, probe_args);
    return kUsage;
}

}  // namespace xbinom::cli
