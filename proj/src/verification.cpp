#include "plaplace/verification.hpp"

#include <algorithm>
#include <array>

#include "plaplace/errors.hpp"

namespace plaplace {

DefectReport defect_order_check(const SolutionSeries& sol) {
    const Rational& p = sol.problem.p();
    const Series residual = residual_series(sol.a, sol.order, sol.constants, p, sol.problem.f());
    const BigReal scale =
        max(BigReal(1, sol.digits), abs(sol.a[1]) * big_b(sol.constants, p, 1));

    DefectReport report{{}, cancellation_tolerance(sol.digits, scale), std::nullopt, BigReal(sol.digits), true,
                        Rational(2 * static_cast<long>(sol.order)) + p - 2};
    for (std::size_t j = 0; j <= sol.order; ++j) {
        report.magnitudes.push_back(abs(residual.coefficient(j)));
        if (!report.first_significant && report.magnitudes.back() > report.tolerance) {
            report.first_significant = j;
            report.first_magnitude = report.magnitudes.back();
        }
    }
    report.passed = !report.first_significant || *report.first_significant >= sol.order;
    return report;
}

BigReal default_validity_radius(const SolutionSeries& sol) {
    const int digits = kOracleDigits;
    const BigReal alpha = abs(sol.a[0]).with_digits(digits);
    const BigReal budget = power_of_ten(-10, digits) * max(alpha, BigReal(1, digits));
    const BigReal negligible = power_of_ten(-(digits / 2), digits);

    // Highest coefficient that is not analytically zero.
    std::size_t k = sol.order;
    while (k > 1 && abs(sol.a[k]).with_digits(digits) < negligible) --k;
    BigReal t_max(1, digits);
    if (k >= 2) {
        const BigReal ratio = budget / abs(sol.a[k]).with_digits(digits);
        t_max = pow(ratio, BigReal(1, digits) / static_cast<long>(k));
    }
    const BigReal inverse_exponent(1 / sol.problem.r_exponent_per_term(), digits);
    return pow(t_max, inverse_exponent);
}

namespace {

struct Flux {
    BigReal p_inv;       // 1/(p-1)
    BigReal n_minus_one;
    const Nonlinearity* f;
};

struct State {
    BigReal u;
    BigReal y;  // r^(n-1) phi(u')
};

State rhs(const Flux& flux, const BigReal& r, const State& s) {
    if (s.y.sign() >= 0) {
        throw StepFailure("flux r^(n-1) phi(u') became non-negative at r = " + r.to_string(12));
    }
    const BigReal weight = pow(r, flux.n_minus_one);
    return {-pow(-s.y / weight, flux.p_inv), -weight * (*flux.f)(s.u)};
}

State axpy(const State& s, const BigReal& h, const State& k) { return {s.u + h * k.u, s.y + h * k.y}; }

// RK4 from r0 over `steps` equal steps; returns u at the 32 sample points
// r0 + i (r_max - r0)/31.
std::vector<BigReal> integrate(const Flux& flux, const BigReal& r0, const BigReal& r_max, State state,
                               std::size_t steps) {
    constexpr std::size_t kIntervals = 31;
    const std::size_t per_sample = (steps + kIntervals - 1) / kIntervals;
    const std::size_t total = per_sample * kIntervals;
    const BigReal h = (r_max - r0) / static_cast<long>(total);
    const BigReal half = h / 2;

    std::vector<BigReal> samples{state.u};
    for (std::size_t i = 0; i < total; ++i) {
        const BigReal r = r0 + h * static_cast<long>(i);
        const State k1 = rhs(flux, r, state);
        const State k2 = rhs(flux, r + half, axpy(state, half, k1));
        const State k3 = rhs(flux, r + half, axpy(state, half, k2));
        const State k4 = rhs(flux, r + h, axpy(state, h, k3));
        const BigReal sixth = h / 6;
        state.u += sixth * (k1.u + 2 * k2.u + 2 * k3.u + k4.u);
        state.y += sixth * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
        if ((i + 1) % per_sample == 0) samples.push_back(state.u);
    }
    return samples;
}

BigReal max_gap(const std::vector<BigReal>& lhs, const std::vector<BigReal>& rhs) {
    BigReal out(lhs.front().digits());
    for (std::size_t i = 0; i < lhs.size(); ++i) out = max(out, abs(lhs[i] - rhs[i]));
    return out;
}

}  // namespace

OdeCheck ode_crosscheck(const SolutionSeries& sol, std::optional<BigReal> r_max_opt, std::size_t steps) {
    const int digits = kOracleDigits;
    const Rational& p = sol.problem.p();
    const BigReal r_max = (r_max_opt ? *r_max_opt : default_validity_radius(sol)).with_digits(digits);
    const BigReal r0 = r_max / 1000;
    if (steps < 31) steps = 31;

    const Flux flux{BigReal(1 / (p - 1), digits), BigReal(sol.problem.n() - 1, digits), &sol.problem.f()};
    const BigReal du = evaluate_derivative(sol, r0).with_digits(digits);
    if (du.sign() >= 0) throw StepFailure("series derivative is non-negative at r0 = " + r0.to_string(12));
    const State start{evaluate_solution(sol, r0).with_digits(digits),
                      -pow(r0, flux.n_minus_one) * pow(-du, BigReal(p - 1, digits))};

    const auto coarse = integrate(flux, r0, r_max, start, steps);
    const auto fine = integrate(flux, r0, r_max, start, 2 * steps);
    const auto finest = integrate(flux, r0, r_max, start, 4 * steps);

    std::vector<BigReal> series;
    const BigReal spacing = (r_max - r0) / 31;
    for (std::size_t i = 0; i <= 31; ++i) {
        series.push_back(evaluate_solution(sol, r0 + spacing * static_cast<long>(i)).with_digits(digits));
    }

    const BigReal e_coarse = max_gap(coarse, fine);
    const BigReal e_fine = max_gap(fine, finest);
    OdeCheck out{r0,
                 r_max,
                 2 * steps,
                 max_gap(series, fine),
                 e_coarse / 15,
                 e_fine.is_zero() ? 0.0 : (e_coarse / e_fine).to_double(),
                 false,
                 kOdeTolerance};
    out.passed = out.max_error.to_double() <= kOdeTolerance;
    return out;
}

PicardCheck picard_crosscheck(const SolutionSeries& sol, std::optional<BigReal> r_max_opt, std::size_t grid_size,
                              std::size_t max_iterations) {
    const int digits = kOracleDigits;
    const Rational& p = sol.problem.p();
    const Rational& n = sol.problem.n();
    const BigReal r_max = (r_max_opt ? *r_max_opt : default_validity_radius(sol)).with_digits(digits);
    const std::size_t m = std::max<std::size_t>(grid_size, 2);

    std::vector<BigReal> r(m + 1, BigReal(digits));
    std::vector<BigReal> inner_weight(m + 1, BigReal(digits));  // r^(n-1)
    std::vector<BigReal> outer_weight(m + 1, BigReal(digits));  // r^(-(n-1)/(p-1))
    const BigReal n_minus_one(n - 1, digits);
    const BigReal outer_exponent(-(n - 1) / (p - 1), digits);
    for (std::size_t i = 0; i <= m; ++i) {
        const BigReal s = BigReal(static_cast<long>(i), digits) / static_cast<long>(m);
        r[i] = r_max * s * s;
        if (i > 0) {
            inner_weight[i] = pow(r[i], n_minus_one);
            outer_weight[i] = pow(r[i], outer_exponent);
        } else if (n == 1) {
            inner_weight[i] = BigReal(1, digits);
        }
    }

    const BigReal alpha(sol.problem.alpha(), digits);
    const BigReal root_exponent(1 / (p - 1), digits);
    const BigReal stop = power_of_ten(-10, digits);
    const Nonlinearity& f = sol.problem.f();

    std::vector<BigReal> u(m + 1, alpha);
    PicardCheck out{r_max, m, 0, false, BigReal(digits), BigReal(digits), false, kPicardTolerance};
    std::vector<BigReal> next(m + 1, BigReal(digits));
    try {
        while (out.iterations < max_iterations) {
            ++out.iterations;
            BigReal inner(digits);
            BigReal outer(digits);
            BigReal prev_integrand = inner_weight[0] * f(u[0]);
            BigReal prev_g(digits);
            next[0] = alpha;
            for (std::size_t i = 1; i <= m; ++i) {
                const BigReal h = r[i] - r[i - 1];
                const BigReal integrand = inner_weight[i] * f(u[i]);
                inner += (prev_integrand + integrand) * h / 2;
                prev_integrand = integrand;
                if (inner.sign() < 0) throw StepFailure("inner integral became negative");
                const BigReal g = outer_weight[i] * pow(inner, root_exponent);
                outer += (prev_g + g) * h / 2;
                prev_g = g;
                next[i] = alpha - outer;
            }
            out.last_change = max_gap(u, next);
            std::swap(u, next);
            if (out.last_change < stop) {
                out.converged = true;
                break;
            }
        }
    } catch (const Error&) {
        out.converged = false;
    }

    for (std::size_t i = 0; i <= m; ++i) {
        out.max_error = max(out.max_error, abs(evaluate_solution(sol, r[i]).with_digits(digits) - u[i]));
    }
    out.passed = out.converged && out.max_error.to_double() <= kPicardTolerance;
    return out;
}

std::optional<std::vector<BigReal>> closed_form_coefficients(const PLaplaceProblem& problem, std::size_t order,
                                                             int digits) {
    const Rational& p = problem.p();
    const BigReal alpha(problem.alpha(), digits);
    std::vector<BigReal> a(order + 1, BigReal(digits));
    a[0] = alpha;

    if (problem.f().is_constant()) {
        const BigReal lambda = problem.f()(alpha);
        if (lambda.sign() <= 0 || order < 1) return std::nullopt;
        const BigReal base = lambda / BigReal(problem.n(), digits);
        a[1] = -pow(base, BigReal(1 / (p - 1), digits)) * BigReal((p - 1) / p, digits);
        return a;
    }
    if (p == 2 && problem.n() == 2 && problem.f().is_exp_of_u()) {
        const BigReal c = exp(alpha) / 8;
        BigReal power = c;  // c^k
        for (std::size_t k = 1; k <= order; ++k) {
            BigReal term = 2 * power / static_cast<long>(k);
            a[k] = k % 2 == 0 ? term : -term;
            power *= c;
        }
        return a;
    }
    return std::nullopt;
}

VerificationReport verify(const SolutionSeries& sol, const VerifyOptions& options) {
    VerificationReport report{defect_order_check(sol), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                              BigReal(sol.digits), false};

    const BigReal f_alpha = sol.problem.f().f_at(sol.a[0], sol.digits);
    report.second_derivative_gap =
        abs(2 * sol.a[1] - u_second_at_zero(sol.constants, sol.problem.p(), f_alpha));

    try {
        report.ode = ode_crosscheck(sol, options.r_max, options.ode_steps);
    } catch (const StepFailure& e) {
        report.ode_failure = e.what();
    }
    report.picard = picard_crosscheck(sol, options.r_max, options.picard_grid, options.picard_iterations);

    if (auto exact = closed_form_coefficients(sol.problem, sol.order, sol.digits)) {
        OracleComparison cmp{sol.problem.f().is_constant() ? "constant f" : "Liouville (p = 2, n = 2, exp)",
                             BigReal(sol.digits), power_of_ten(-(sol.digits - 10), sol.digits), true};
        for (std::size_t k = 0; k <= sol.order; ++k) {
            const BigReal& e = (*exact)[k];
            const BigReal gap = abs(sol.a[k] - e);
            cmp.max_relative_error = max(cmp.max_relative_error, e.is_zero() ? gap : gap / abs(e));
        }
        cmp.passed = cmp.max_relative_error <= cmp.tolerance;
        report.oracle = std::move(cmp);
    }

    const BigReal identity_tol = power_of_ten(-(sol.digits - 8), sol.digits);
    report.passed = report.defect.passed && report.ode && report.ode->passed && report.picard->passed &&
                    (!report.oracle || report.oracle->passed) && report.second_derivative_gap <= identity_tol;
    return report;
}

}  // namespace plaplace
