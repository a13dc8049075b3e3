#include "plaplace/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plaplace/errors.hpp"
#include "plaplace/solver.hpp"
#include "plaplace/verification.hpp"

namespace plaplace::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string p = "";
    std::string n = "2";
    std::string alpha = "";
    std::string f = "";
    std::size_t order = 10;
    int precision = kDefaultDigits;
    Format format = Format::Text;
    // eval
    std::vector<std::string> radii;
    // table
    std::string r_min = "0";
    std::string r_max;
    std::size_t samples = 33;
    // verify
    bool strict = false;
    std::size_t ode_steps = kDefaultOdeSteps;
    std::size_t picard_grid = kDefaultPicardGrid;
};

/// Exact rational, or (for evaluation points only) a decimal literal.
BigReal parse_point(const std::string& text, int digits) {
    try {
        return BigReal(parse_rational(text), digits);
    } catch (const InvalidArgument&) {
        return BigReal::from_string(text, digits);
    }
}

void add_problem_options(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--p", cfg.p, "exponent p > 1 of the p-Laplacian, as a fraction (41/10, not 4.1)")->required();
    cmd.add_option("--n", cfg.n, "space dimension n (rational, default 2)");
    cmd.add_option("--alpha", cfg.alpha, "initial value u(0), as a fraction")->required();
    cmd.add_option("--f", cfg.f,
                   "nonlinearity f(u): + - * over fractions, u, u^q, exp sin cos log; unary minus applies "
                   "to a single factor, so -u^2 is -(u^2)")
        ->required();
    cmd.add_option("--order", cfg.order, "number K of series coefficients after a_0")->check(CLI::Range(1, 200));
    cmd.add_option("--precision", cfg.precision, "working precision in decimal digits")
        ->check(CLI::Range(kMinDigits, 100000));
    cmd.add_option("--format", cfg.format, "output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}));
}

ordered_json problem_json(const RunConfig& cfg, const SolutionSeries& sol) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["p"] = format_rational(sol.problem.p());
    j["n"] = format_rational(sol.problem.n());
    j["alpha"] = format_rational(sol.problem.alpha());
    j["f"] = cfg.f;
    j["order"] = sol.order;
    j["precision_digits"] = cfg.precision;
    return j;
}

void print_header(std::ostream& out, const RunConfig& cfg, const SolutionSeries& sol) {
    out << "# p = " << format_rational(sol.problem.p()) << ", n = " << format_rational(sol.problem.n())
        << ", alpha = " << format_rational(sol.problem.alpha()) << ", f(u) = " << cfg.f << ", K = " << sol.order
        << ", precision = " << cfg.precision << " digits\n";
}

int cmd_solve(const RunConfig& cfg, const SolutionSeries& sol, std::ostream& out) {
    const Rational step = sol.problem.r_exponent_per_term();
    switch (cfg.format) {
        case Format::Json: {
            ordered_json j = problem_json(cfg, sol);
            ordered_json coeffs = ordered_json::array();
            for (std::size_t k = 0; k <= sol.order; ++k) {
                coeffs.push_back({{"k", k},
                                  {"z_exponent", 2 * k},
                                  {"r_exponent", format_rational(step * static_cast<long>(k))},
                                  {"value", sol.a[k].to_string(cfg.precision)}});
            }
            j["coefficients"] = std::move(coeffs);
            j["diagnostics"] = {
                {"max_cancellation_residual", sol.diagnostics.max_residual().to_string(6)},
                {"precision_escalations", sol.diagnostics.escalations},
                {"working_precision_digits", sol.digits},
            };
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "k,z_exponent,r_exponent,value\n";
            for (std::size_t k = 0; k <= sol.order; ++k) {
                out << k << ',' << 2 * k << ',' << format_rational(step * static_cast<long>(k)) << ','
                    << sol.a[k].to_string(cfg.precision) << '\n';
            }
            break;
        case Format::Text:
            print_header(out, cfg, sol);
            out << "# u(r) = sum_k a_k z^(2k), z^2 = r^(" << format_rational(step) << ")\n";
            for (std::size_t k = 0; k <= sol.order; ++k) {
                out << "a_" << k << "  z^" << 2 * k << "  r^" << format_rational(step * static_cast<long>(k))
                    << "  " << sol.a[k].to_string(cfg.precision) << '\n';
            }
            out << "# max cancellation residual " << sol.diagnostics.max_residual().to_string(6)
                << ", precision escalations " << sol.diagnostics.escalations << '\n';
            break;
    }
    return kSuccess;
}

int emit_points(const RunConfig& cfg, const SolutionSeries& sol, const std::vector<BigReal>& radii,
                std::ostream& out) {
    std::vector<BigReal> values;
    values.reserve(radii.size());
    for (const auto& r : radii) values.push_back(evaluate_solution(sol, r));
    switch (cfg.format) {
        case Format::Json: {
            ordered_json j = problem_json(cfg, sol);
            ordered_json pts = ordered_json::array();
            for (std::size_t i = 0; i < radii.size(); ++i) {
                pts.push_back({{"r", radii[i].to_string(cfg.precision)}, {"u", values[i].to_string(cfg.precision)}});
            }
            j["points"] = std::move(pts);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "r,u\n";
            for (std::size_t i = 0; i < radii.size(); ++i) {
                out << radii[i].to_string(cfg.precision) << ',' << values[i].to_string(cfg.precision) << '\n';
            }
            break;
        case Format::Text:
            print_header(out, cfg, sol);
            for (std::size_t i = 0; i < radii.size(); ++i) {
                out << radii[i].to_string(cfg.precision) << "  " << values[i].to_string(cfg.precision) << '\n';
            }
            break;
    }
    return kSuccess;
}

int cmd_table(const RunConfig& cfg, const SolutionSeries& sol, std::ostream& out) {
    const int digits = sol.digits;
    const BigReal lo = parse_point(cfg.r_min, digits);
    const BigReal hi = cfg.r_max.empty() ? default_validity_radius(sol).with_digits(digits)
                                         : parse_point(cfg.r_max, digits);
    if (lo.sign() < 0 || hi < lo) throw InvalidArgument("table needs 0 <= r-min <= r-max");
    const std::size_t count = std::max<std::size_t>(cfg.samples, 2);
    std::vector<BigReal> radii;
    for (std::size_t i = 0; i < count; ++i) {
        radii.push_back(lo + (hi - lo) * static_cast<long>(i) / static_cast<long>(count - 1));
    }
    return emit_points(cfg, sol, radii, out);
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_verify(const RunConfig& cfg, const SolutionSeries& sol, std::ostream& out) {
    VerifyOptions options;
    options.ode_steps = cfg.ode_steps;
    options.picard_grid = cfg.picard_grid;
    if (!cfg.r_max.empty()) options.r_max = parse_point(cfg.r_max, kOracleDigits);
    const VerificationReport report = verify(sol, options);
    const DefectReport& d = report.defect;

    if (cfg.format == Format::Json) {
        ordered_json j = problem_json(cfg, sol);
        ordered_json mags = ordered_json::array();
        for (const auto& m : d.magnitudes) mags.push_back(m.to_string(6));
        j["defect"] = {{"magnitudes", mags},
                       {"tolerance", d.tolerance.to_string(6)},
                       {"first_significant_index",
                        d.first_significant ? ordered_json(*d.first_significant) : ordered_json(nullptr)},
                       {"remainder_z_exponent", format_rational(d.remainder_z_exponent)},
                       {"passed", d.passed}};
        if (report.ode) {
            j["ode"] = {{"r0", report.ode->r0.to_string(12)},
                        {"r_max", report.ode->r_max.to_string(12)},
                        {"steps", report.ode->steps},
                        {"max_error", report.ode->max_error.to_string(6)},
                        {"richardson_estimate", report.ode->richardson_estimate.to_string(6)},
                        {"convergence_ratio", report.ode->convergence_ratio},
                        {"tolerance", report.ode->tolerance},
                        {"passed", report.ode->passed}};
        } else {
            j["ode"] = {{"failure", report.ode_failure.value_or("")}, {"passed", false}};
        }
        j["picard"] = {{"r_max", report.picard->r_max.to_string(12)},
                       {"grid_size", report.picard->grid_size},
                       {"iterations", report.picard->iterations},
                       {"converged", report.picard->converged},
                       {"max_error", report.picard->max_error.to_string(6)},
                       {"tolerance", report.picard->tolerance},
                       {"passed", report.picard->passed}};
        if (report.oracle) {
            j["closed_form"] = {{"name", report.oracle->name},
                                {"max_relative_error", report.oracle->max_relative_error.to_string(6)},
                                {"tolerance", report.oracle->tolerance.to_string(6)},
                                {"passed", report.oracle->passed}};
        }
        j["second_derivative_gap"] = report.second_derivative_gap.to_string(6);
        j["passed"] = report.passed;
        out << j.dump(2) << '\n';
    } else {
        print_header(out, cfg, sol);
        out << "defect      " << pass_word(d.passed) << "  first significant index "
            << (d.first_significant ? std::to_string(*d.first_significant) : std::string("none")) << " (K = "
            << sol.order << "), tolerance " << d.tolerance.to_string(6) << ", remainder O(z^"
            << format_rational(d.remainder_z_exponent) << ")\n";
        for (std::size_t j = 0; j < d.magnitudes.size(); ++j) {
            out << "  |R_" << j << "| = " << d.magnitudes[j].to_string(6) << '\n';
        }
        if (report.ode) {
            out << "ode         " << pass_word(report.ode->passed) << "  max error "
                << report.ode->max_error.to_string(6) << " on [" << report.ode->r0.to_string(6) << ", "
                << report.ode->r_max.to_string(6) << "], Richardson " << report.ode->richardson_estimate.to_string(6)
                << ", step-halving ratio " << report.ode->convergence_ratio << '\n';
        } else {
            out << "ode         FAIL  " << report.ode_failure.value_or("") << '\n';
        }
        out << "picard      " << pass_word(report.picard->passed) << "  max error "
            << report.picard->max_error.to_string(6) << " after " << report.picard->iterations << " iterations"
            << (report.picard->converged ? "" : " (no convergence)") << '\n';
        if (report.oracle) {
            out << "closed form " << pass_word(report.oracle->passed) << "  " << report.oracle->name
                << ", max relative error " << report.oracle->max_relative_error.to_string(6) << '\n';
        }
        out << "u''(0)      |2 a_1 - u''(0)| = " << report.second_derivative_gap.to_string(6) << '\n';
        out << "overall     " << pass_word(report.passed) << '\n';
    }
    return cfg.strict && !report.passed ? kVerificationFailed : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Series solutions of radial p-Laplace initial value problems"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* solve_cmd = app.add_subcommand("solve", "print the series coefficients a_k");
    CLI::App* verify_cmd = app.add_subcommand("verify", "check the series against independent oracles");
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate u(r) at given radii");
    CLI::App* table_cmd = app.add_subcommand("table", "sample (r, u(r)) on a uniform grid");
    for (CLI::App* cmd : {solve_cmd, verify_cmd, eval_cmd, table_cmd}) add_problem_options(*cmd, cfg);

    eval_cmd->add_option("--r", cfg.radii, "radius (repeatable)")->required();
    table_cmd->add_option("--r-min", cfg.r_min, "smallest radius (default 0)");
    table_cmd->add_option("--r-max", cfg.r_max, "largest radius (default: series validity radius)");
    table_cmd->add_option("--samples", cfg.samples, "number of samples (default 33)");
    verify_cmd->add_flag("--strict", cfg.strict, "exit with code 3 when any check fails");
    verify_cmd->add_option("--r-max", cfg.r_max, "oracle interval [0, r-max] (default: validity radius)");
    verify_cmd->add_option("--ode-steps", cfg.ode_steps, "RK4 steps of the coarse ODE integration");
    verify_cmd->add_option("--picard-grid", cfg.picard_grid, "Picard grid intervals");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::optional<PLaplaceProblem> problem;
    try {
        problem.emplace(parse_rational(cfg.p), parse_rational(cfg.n), parse_rational(cfg.alpha),
                        Nonlinearity::parse(cfg.f));
    } catch (const InvalidProblem& e) {
        err << "error: " << e.what() << '\n';
        return kSolverError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    for (const auto& w : problem->warnings()) err << "warning: " << w << '\n';

    try {
        const SolutionSeries sol = solve(*problem, cfg.order, cfg.precision);
        if (sol.diagnostics.escalations > 0) {
            err << "note: precision raised to " << sol.digits << " digits after "
                << sol.diagnostics.escalations << " escalation(s)\n";
        }
        if (*solve_cmd) return cmd_solve(cfg, sol, out);
        if (*verify_cmd) return cmd_verify(cfg, sol, out);
        if (*table_cmd) return cmd_table(cfg, sol, out);
        std::vector<BigReal> radii;
        for (const auto& r : cfg.radii) radii.push_back(parse_point(r, sol.digits));
        for (const auto& r : radii) {
            if (r.sign() < 0) throw InvalidArgument("radius must be non-negative");
        }
        return emit_points(cfg, sol, radii, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kSolverError;
    }
}

}  // namespace plaplace::cli
