#include "ccr/cli.hpp"

#include "ccr/analysis.hpp"
#include "ccr/errors.hpp"
#include "ccr/expression.hpp"
#include "ccr/operators.hpp"
#include "ccr/report_io.hpp"
#include "ccr/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ccr::cli {
namespace {

Grid make_grid(const RunConfig& c) {
    return Grid(c.n, parse_rational(c.ell), c.boundary, parse_rational(c.hbar));
}

template <class F>
void with_field(NumericMode mode, F&& f) {
    if (mode == NumericMode::ExactRational) {
        f.template operator()<ExactComplex>();
    } else {
        f.template operator()<FloatComplex>();
    }
}

template <Field T>
void emit_matrix(std::ostream& os, const BandedMatrix<T>& a, Format format) {
    if (format == Format::Csv) {
        write_matrix_csv(os, a);
    } else {
        os << matrix_to_json(a).dump(2) << '\n';
    }
}

template <Field T>
void emit_wave(std::ostream& os, const WaveVector<T>& psi, Format format) {
    if (format == Format::Csv) {
        write_wave_csv(os, psi);
    } else {
        os << wave_to_json(psi).dump(2) << '\n';
    }
}

template <Field T>
BandedMatrix<T> named_operator(const Grid& grid, const std::string& name) {
    const auto q = build_position<T>(grid);
    if (name == "q") return q;
    if (name == "dq") return build_derivative<T>(grid);
    const auto p = build_momentum<T>(grid);
    if (name == "p") return p;
    if (name == "pq") return matmul(p, q);
    if (name == "qp") return matmul(q, p);
    if (name == "commutator") return commutator(p, q);
    if (name == "deviation") return unit_deviation<T>(grid);
    throw ValidationError("unknown operator '" + name + "'");
}

void run_operators(const RunConfig& c, std::ostream& os) {
    const Grid grid = make_grid(c);
    with_field(c.mode.value_or(NumericMode::ExactRational),
               [&]<class T>() { emit_matrix(os, named_operator<T>(grid, c.emit), c.format); });
}

void run_trace_paradox(const RunConfig& c, std::ostream& os) {
    const Grid grid = make_grid(c);
    with_field(c.mode.value_or(NumericMode::ExactRational), [&]<class T>() {
        const auto report = trace_paradox<T>(grid);
        if constexpr (std::is_same_v<T, ExactComplex>) {
            if (!scalar_traits<T>::is_zero(report.trace_commutator))
                throw std::logic_error("exact commutator trace is nonzero");
        }
        if (c.format == Format::Csv) {
            write_trace_report_csv(os, report);
        } else {
            os << trace_report_to_json(report).dump(2) << '\n';
        }
    });
}

void run_converge(const RunConfig& c, std::ostream& os) {
    if (c.mode == NumericMode::ExactRational)
        throw ModeError("the convergence study runs in float mode only");
    const Expr f = parse_expr(c.function);
    ConvergenceSetup setup;
    setup.ell0 = parse_rational(c.ell0);
    setup.steps = c.steps;
    setup.window = parse_rational(c.window);
    setup.hbar = parse_rational(c.hbar);
    const auto rows = convergence_study([&](double q) { return eval_expr(f, q); }, setup);
    if (c.format == Format::Csv) {
        write_convergence_csv(os, rows);
    } else {
        os << convergence_to_json(rows).dump(2) << '\n';
    }
}

void run_dispersion(const RunConfig& c, std::ostream& os) {
    if (c.mode == NumericMode::ExactRational) throw ModeError("the dispersion probe runs in float mode only");
    const auto result = dispersion_check(make_grid(c), c.wave_mode);
    if (c.format == Format::Csv) {
        write_dispersion_csv(os, result);
    } else {
        os << dispersion_to_json(result).dump(2) << '\n';
    }
}

void run_apply(const RunConfig& c, std::ostream& os) {
    const Grid grid = make_grid(c);
    const Expr f = parse_expr(c.function);
    const NumericMode mode = c.mode.value_or(is_exact(f) ? NumericMode::ExactRational : NumericMode::Float);
    with_field(mode, [&]<class T>() {
        const auto psi = sample_expression<T>(grid, f);
        emit_wave(os, ccr::apply(named_operator<T>(grid, c.op), psi), c.format);
    });
}

void dispatch(const RunConfig& c, std::ostream& os) {
    switch (c.command) {
        case Command::Operators: return run_operators(c, os);
        case Command::TraceParadox: return run_trace_paradox(c, os);
        case Command::Converge: return run_converge(c, os);
        case Command::Dispersion: return run_dispersion(c, os);
        case Command::Apply: return run_apply(c, os);
    }
}

void add_grid_options(CLI::App& sub, RunConfig& c, bool with_boundary) {
    sub.add_option("--n", c.n, "grid half-width N (D = 2N+1)");
    sub.add_option("--ell", c.ell, "grid spacing, p/q or decimal");
    sub.add_option("--hbar", c.hbar, "hbar, p/q or decimal");
    if (with_boundary) {
        sub.add_option("--boundary", c.boundary, "open|periodic")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, Boundary>{{"open", Boundary::Open}, {"periodic", Boundary::Periodic}}));
    }
}

void add_mode_option(CLI::App& sub, RunConfig& c) {
    sub.add_option_function<std::string>(
           "--mode", [&c](const std::string& s) { c.mode = parse_mode(s); }, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
}

void add_output_options(CLI::App& sub, RunConfig& c) {
    sub.add_option("--format", c.format, "csv|json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
    sub.add_option("--output", c.output, "output path (default: standard output)");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::ostringstream buffer;
        dispatch(config, buffer);
        if (config.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file) throw ValidationError("cannot open output file '" + config.output + "'");
            file << buffer.str();
            if (!file) throw ValidationError("failed writing '" + config.output + "'");
        }
        return kExitOk;
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kExitInternal;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app("Finite matrix representations of the canonical operators q and p", "ccr");
    app.require_subcommand(1);

    auto* operators = app.add_subcommand("operators", "emit q, dq, p, products, the commutator or its deviation");
    add_grid_options(*operators, c, true);
    add_mode_option(*operators, c);
    add_output_options(*operators, c);
    operators->add_option("--emit", c.emit, "q|dq|p|pq|qp|commutator|deviation")
        ->required()
        ->check(CLI::IsMember({"q", "dq", "p", "pq", "qp", "commutator", "deviation"}));

    auto* paradox = app.add_subcommand("trace-paradox", "trace of [p,q] against i hbar D");
    add_grid_options(*paradox, c, true);
    add_mode_option(*paradox, c);
    add_output_options(*paradox, c);

    auto* converge = app.add_subcommand("converge", "deviation of [p,q] psi from i hbar psi under spacing halving");
    converge->add_option("--function", c.function, "psi(q), e.g. exp(-q^2)")->required();
    converge->add_option("--window", c.window, "fixed half-width W of the q window");
    converge->add_option("--ell0", c.ell0, "initial spacing");
    converge->add_option("--steps", c.steps, "number of halvings");
    converge->add_option("--hbar", c.hbar, "hbar, p/q or decimal");
    add_output_options(*converge, c);

    auto* dispersion = app.add_subcommand("dispersion", "plane-wave eigenvalue of p on a periodic grid");
    add_grid_options(*dispersion, c, true);
    dispersion->add_option("--mode", c.wave_mode, "plane-wave index m, |m| <= N")->required();
    add_output_options(*dispersion, c);

    auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a sampled wavefunction");
    add_grid_options(*apply_cmd, c, true);
    add_mode_option(*apply_cmd, c);
    add_output_options(*apply_cmd, c);
    apply_cmd->add_option("--function", c.function, "psi(q)")->required();
    apply_cmd->add_option("--operator", c.op, "q|dq|p|commutator")
        ->required()
        ->check(CLI::IsMember({"q", "dq", "p", "commutator"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }

    if (operators->parsed()) {
        c.command = Command::Operators;
    } else if (paradox->parsed()) {
        c.command = Command::TraceParadox;
    } else if (converge->parsed()) {
        c.command = Command::Converge;
    } else if (dispersion->parsed()) {
        c.command = Command::Dispersion;
        if (dispersion->count("--boundary") == 0) c.boundary = Boundary::Periodic;
    } else {
        c.command = Command::Apply;
    }
    return run(c, out, err);
}

}  // namespace ccr::cli
