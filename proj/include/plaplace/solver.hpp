#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plaplace/big_real.hpp"
#include "plaplace/problem.hpp"
#include "plaplace/series.hpp"

namespace plaplace {

/// Cancellation diagnostics of one coefficient step.
struct CancellationStep {
    long k;
    /// max |R_j| over j < k-1: residual coefficients that vanish analytically.
    BigReal max_residual;
    /// R_{k-1}, the coefficient a_k is extracted from.
    BigReal extracted;
    int digits;
};

struct CancellationReport {
    std::vector<CancellationStep> steps;  // steps of the final (accepted) pass
    int escalations = 0;
    int final_digits = 0;

    /// Largest max_residual over all steps (zero when K <= 1).
    BigReal max_residual() const;
};

/// Even-series solution u(z) = sum_k a_k z^(2k) = sum_k a_k r^(kp/(p-1)).
struct SolutionSeries {
    PLaplaceProblem problem;
    DerivedConstants constants;
    std::size_t order;
    std::vector<BigReal> a;  // a_0..a_K
    int digits;
    CancellationReport diagnostics;
};

struct SolverOptions {
    /// Maximum number of precision doublings before PrecisionExhausted.
    int max_escalations = 3;
};

/// a_1 = -[f(alpha) / ((p-1) 2^(p-2) B_1)]^(1/(p-1)).
BigReal compute_a1(const DerivedConstants& constants, const Rational& p, const BigReal& f_alpha);

/// Residual R(t) of the transformed equation for the polynomial
/// v(t) = sum_{j<len} a_j t^j, through t^order. With S = -2 v'(t):
///
///   R = a (2 v' + 4 t v'') + 2A/(p-1) v' + S^(2-p) f(v) / (p-1).
///
/// `f_taylor` holds the Taylor coefficients of f at a_0 (at least order+1).
/// Throws NonPositiveLeadingCoefficient when S(0) = -2 a_1 <= 0.
Series residual_series(std::span<const BigReal> partial_a, std::size_t order, const DerivedConstants& constants,
                       const Rational& p, std::span<const BigReal> f_taylor);
/// Same, computing the Taylor coefficients of f at a_0 itself.
Series residual_series(std::span<const BigReal> partial_a, std::size_t order, const DerivedConstants& constants,
                       const Rational& p, const Nonlinearity& f);

/// Outcome of extracting one coefficient from the residual.
struct CoefficientStep {
    BigReal value;
    CancellationStep diagnostics;
    /// The analytically-zero residuals exceed the cancellation threshold.
    bool needs_more_precision;
};

/// Working state of the recursion: a_0..a_{k-1} at a fixed precision.
struct SolverState {
    const PLaplaceProblem* problem;
    DerivedConstants constants;
    std::vector<BigReal> a;
    std::vector<BigReal> f_taylor;  // Taylor coefficients of f at alpha
    BigReal f_alpha;
    int digits;
};

/// a_k = -R_{k-1}(a_0..a_{k-1}) / (B_k C_k), for k >= 2.
CoefficientStep compute_next_coefficient(const SolverState& state, long k);

/// Threshold below which analytically-zero residual coefficients count as
/// cancelled: 10^(-digits/2) * scale.
BigReal cancellation_tolerance(int digits, const BigReal& scale);

/// Computes a_0..a_K, doubling the precision (from scratch) when residual
/// cancellation is insufficient. Throws PrecisionExhausted past the cap.
SolutionSeries solve(const PLaplaceProblem& problem, std::size_t order, int digits = kDefaultDigits,
                     const SolverOptions& options = {});

/// u at radius r >= 0: Horner in t = r^(p/(p-1)). Throws InvalidArgument for r < 0.
BigReal evaluate_solution(const SolutionSeries& sol, const BigReal& r);
/// u at z: Horner in t = z^2.
BigReal evaluate_in_z(const SolutionSeries& sol, const BigReal& z);
/// du/dr at r > 0, by termwise differentiation of the r-series.
BigReal evaluate_derivative(const SolutionSeries& sol, const BigReal& r);

}  // namespace plaplace
