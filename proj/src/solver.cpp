#include "plaplace/solver.hpp"

#include <algorithm>
#include <string>

#include "plaplace/errors.hpp"

namespace plaplace {

BigReal CancellationReport::max_residual() const {
    BigReal out(final_digits > 0 ? final_digits : kDefaultDigits);
    for (const auto& step : steps) out = max(out, step.max_residual);
    return out;
}

BigReal compute_a1(const DerivedConstants& constants, const Rational& p, const BigReal& f_alpha) {
    const int digits = constants.digits;
    const BigReal p_minus_one(p - 1, digits);
    const BigReal two_pow = pow(BigReal(2, digits), BigReal(p - 2, digits));
    const BigReal base = f_alpha / (p_minus_one * two_pow * big_b(constants, p, 1));
    return -pow(base, BigReal(1, digits) / p_minus_one);
}

Series residual_series(std::span<const BigReal> partial_a, std::size_t order, const DerivedConstants& constants,
                       const Rational& p, std::span<const BigReal> f_taylor) {
    const int digits = constants.digits;
    if (partial_a.empty()) throw InvalidArgument("residual_series needs at least a_0");

    // v'' at t^order needs a_{order+2}, but every residual coefficient up to
    // t^order only involves a_j with j <= order+1.
    const Series v = Series::polynomial(partial_a, order + 1, digits);
    const Series dv = v.derivative();                  // order M
    const Series t_ddv = dv.derivative().times_t();    // order M

    const BigReal two(2, digits);
    const BigReal p_minus_one(p - 1, digits);
    const Series linear = constants.a * (two * dv + BigReal(4, digits) * t_ddv) +
                          (two * constants.A / p_minus_one) * dv;

    // z^(p-2)/phi'(u'(z)) = S^(2-p)/(p-1) with -u'(z) = z S(t).
    const Series s = BigReal(-2, digits) * dv;
    const Series s_pow = real_pow(s, BigReal(2 - p, digits));
    const Series f_of_v = compose_analytic(f_taylor.first(std::min(f_taylor.size(), order + 1)), v.truncate(order));
    const Series nonlinear = (BigReal(1, digits) / p_minus_one) * (s_pow * f_of_v);

    return linear + nonlinear;
}

Series residual_series(std::span<const BigReal> partial_a, std::size_t order, const DerivedConstants& constants,
                       const Rational& p, const Nonlinearity& f) {
    if (partial_a.empty()) throw InvalidArgument("residual_series needs at least a_0");
    const auto f_taylor = f.taylor_at(partial_a[0], order, constants.digits);
    return residual_series(partial_a, order, constants, p, f_taylor);
}

BigReal cancellation_tolerance(int digits, const BigReal& scale) {
    return power_of_ten(-(digits / 2), digits) * scale.with_digits(digits);
}

namespace {

BigReal residual_scale(const SolverState& state, const BigReal& extracted) {
    const BigReal linear_scale = abs(state.a[1]) * big_b(state.constants, state.problem->p(), 1);
    return max(max(BigReal(1, state.digits), linear_scale), abs(extracted));
}

SolverState initial_state(const PLaplaceProblem& problem, std::size_t order, int digits) {
    SolverState state{&problem, derive_constants(problem, digits), {}, {}, BigReal(digits), digits};
    const BigReal alpha(problem.alpha(), digits);
    state.f_taylor = problem.f().taylor_at(alpha, order, digits);
    state.f_alpha = state.f_taylor[0];
    if (state.f_alpha.sign() <= 0) {
        throw InvalidProblem("f(alpha) must be positive, got " + state.f_alpha.to_string(12));
    }
    state.a.push_back(alpha);
    state.a.push_back(compute_a1(state.constants, problem.p(), state.f_alpha));
    return state;
}

}  // namespace

CoefficientStep compute_next_coefficient(const SolverState& state, long k) {
    if (k < 2 || state.a.size() != static_cast<std::size_t>(k)) {
        throw InvalidArgument("compute_next_coefficient(k=" + std::to_string(k) + ") needs exactly a_0..a_" +
                              std::to_string(k - 1));
    }
    const Rational& p = state.problem->p();
    const auto m = static_cast<std::size_t>(k - 1);
    const Series residual = residual_series(state.a, m, state.constants, p, std::span(state.f_taylor));

    const BigReal& extracted = residual.coefficient(m);
    BigReal max_residual(state.digits);
    for (std::size_t j = 0; j < m; ++j) max_residual = max(max_residual, abs(residual.coefficient(j)));

    const BigReal bc = big_b(state.constants, p, k) * big_c(state.constants, p, k, state.a[1], state.f_alpha);
    const bool too_noisy = max_residual > cancellation_tolerance(state.digits, residual_scale(state, extracted));
    return {-extracted / bc, CancellationStep{k, max_residual, extracted, state.digits}, too_noisy};
}

SolutionSeries solve(const PLaplaceProblem& problem, std::size_t order, int digits, const SolverOptions& options) {
    if (order < 1) throw InvalidArgument("series order K must be at least 1");
    if (digits < kMinDigits) {
        throw InvalidArgument("precision must be at least " + std::to_string(kMinDigits) + " digits");
    }
    int working = std::max(kDefaultDigits, digits);

    for (int escalation = 0;; ++escalation) {
        SolverState state = initial_state(problem, order, working);
        CancellationReport report;
        report.escalations = escalation;
        report.final_digits = working;
        bool restart = false;
        for (std::size_t k = 2; k <= order; ++k) {
            CoefficientStep step = compute_next_coefficient(state, static_cast<long>(k));
            report.steps.push_back(step.diagnostics);
            if (step.needs_more_precision) {
                restart = true;
                break;
            }
            state.a.push_back(std::move(step.value));
        }
        if (!restart) {
            return SolutionSeries{problem, std::move(state.constants), order, std::move(state.a), working,
                                  std::move(report)};
        }
        if (escalation >= options.max_escalations) {
            const auto& last = report.steps.back();
            throw PrecisionExhausted("residual cancellation at k = " + std::to_string(last.k) + " stays at " +
                                     last.max_residual.to_string(6) + " after " + std::to_string(escalation) +
                                     " precision escalations (" + std::to_string(working) + " digits)");
        }
        working *= 2;
    }
}

BigReal evaluate_in_z(const SolutionSeries& sol, const BigReal& z) {
    const BigReal t = z.with_digits(sol.digits) * z.with_digits(sol.digits);
    BigReal acc = sol.a.back();
    for (std::size_t k = sol.a.size() - 1; k-- > 0;) {
        acc *= t;
        acc += sol.a[k];
    }
    return acc;
}

BigReal evaluate_solution(const SolutionSeries& sol, const BigReal& r) {
    if (r.sign() < 0) throw InvalidArgument("radius must be non-negative, got " + r.to_string(12));
    if (r.is_zero()) return sol.a[0];
    const BigReal t = pow(r.with_digits(sol.digits), BigReal(sol.problem.r_exponent_per_term(), sol.digits));
    BigReal acc = sol.a.back();
    for (std::size_t k = sol.a.size() - 1; k-- > 0;) {
        acc *= t;
        acc += sol.a[k];
    }
    return acc;
}

BigReal evaluate_derivative(const SolutionSeries& sol, const BigReal& r) {
    if (r.sign() <= 0) throw InvalidArgument("derivative needs r > 0, got " + r.to_string(12));
    const BigReal exponent(sol.problem.r_exponent_per_term(), sol.digits);
    const BigReal rr = r.with_digits(sol.digits);
    const BigReal t = pow(rr, exponent);
    BigReal acc(sol.digits);
    for (std::size_t k = sol.a.size() - 1; k >= 1; --k) {
        acc *= t;
        acc += sol.a[k] * static_cast<long>(k);
    }
    // sum_k k a_k t^k = t * acc
    return acc * t * exponent / rr;
}

}  // namespace plaplace
