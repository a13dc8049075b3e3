#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plaplace/big_real.hpp"
#include "plaplace/solver.hpp"

namespace plaplace {

/// Oracles work at this fixed precision regardless of the solver precision.
inline constexpr int kOracleDigits = 64;

/// Default sample counts for the oracles.
inline constexpr std::size_t kDefaultOdeSteps = 31 * 100;
inline constexpr std::size_t kDefaultPicardGrid = 400;
inline constexpr std::size_t kDefaultPicardIterations = 200;

/// Series vs ODE integration. Measured on p = 41/10, n = 3, f = exp(u),
/// alpha = 1, K = 15 over the default radius (1.27): 1.2e-8 / 8.1e-10 / 5.6e-11
/// at 1550 / 3100 / 6200 reported steps, with the series tail held below 1e-10.
inline constexpr double kOdeTolerance = 1e-8;
/// Series vs Picard fixed point, limited by second-order trapezoid quadrature.
/// Same problem on [0, 3/10]: 1.2e-5, 3.2e-6, 8.2e-7, 2.1e-7 at m = 100, 200,
/// 400, 800 (ratio 4 per doubling).
inline constexpr double kPicardTolerance = 1e-4;

/// Even-coefficient defect of a solved series (the transformed equation's
/// left-hand side evaluated on the truncated series, expanded in t = z^2).
struct DefectReport {
    std::vector<BigReal> magnitudes;  // |R_j|, j = 0..K
    BigReal tolerance;                // 10^(-digits/2) * max(1, |a_1| B_1)
    /// First index whose magnitude exceeds the tolerance, if any.
    std::optional<std::size_t> first_significant;
    BigReal first_magnitude;
    /// All of t^0..t^(K-1) are below tolerance.
    bool passed;
    /// 2K + p - 2: z-exponent of the fractional remainder beyond the computed order.
    Rational remainder_z_exponent;
};

DefectReport defect_order_check(const SolutionSeries& sol);

struct OdeCheck {
    BigReal r0;
    BigReal r_max;
    std::size_t steps;           // RK4 steps of the reported integration
    BigReal max_error;           // max |series - integration| on 32 samples
    BigReal richardson_estimate; // |y_N - y_2N| / 15 on the same samples
    /// e(N)/e(2N) with e(M) = max |y_M - y_2M|; close to 16 for fourth order.
    double convergence_ratio;
    bool passed;
    double tolerance;
};

/// Radius inside which the truncated series is trusted: |a_K t^K| < 1e-10 max(|alpha|, 1).
BigReal default_validity_radius(const SolutionSeries& sol);

/// Integrates u' = -(-y/r^(n-1))^(1/(p-1)), y' = -r^(n-1) f(u) with y = r^(n-1) phi(u')
/// from r0 = r_max/1000 using classical RK4 with `steps`, 2*steps and 4*steps
/// fixed steps. Throws StepFailure if the flux stops being negative.
OdeCheck ode_crosscheck(const SolutionSeries& sol, std::optional<BigReal> r_max = std::nullopt,
                        std::size_t steps = kDefaultOdeSteps);

struct PicardCheck {
    BigReal r_max;
    std::size_t grid_size;
    std::size_t iterations;
    bool converged;
    BigReal last_change;
    BigReal max_error;
    bool passed;
    double tolerance;
};

/// Fixed-point iteration of
///   u(r) = alpha - int_0^r s^{-(n-1)/(p-1)} [int_0^s x^(n-1) f(u(x)) dx]^(1/(p-1)) ds
/// on the graded grid r_i = r_max (i/m)^2 with composite trapezoid quadrature,
/// starting from u = alpha. Non-convergence is reported, not thrown.
PicardCheck picard_crosscheck(const SolutionSeries& sol, std::optional<BigReal> r_max = std::nullopt,
                              std::size_t grid_size = kDefaultPicardGrid,
                              std::size_t max_iterations = kDefaultPicardIterations);

/// Exact a_0..a_K when the problem has a closed form:
///  - f constant (= lambda): u = alpha - (lambda/n)^(1/(p-1)) (p-1)/p r^(p/(p-1));
///  - p = 2, n = 2, f = exp(u): u = alpha - 2 ln(1 + e^alpha r^2/8).
std::optional<std::vector<BigReal>> closed_form_coefficients(const PLaplaceProblem& problem, std::size_t order,
                                                             int digits);

struct OracleComparison {
    std::string name;
    BigReal max_relative_error;  // relative where the exact value is nonzero, absolute otherwise
    BigReal tolerance;
    bool passed;
};

struct VerificationReport {
    DefectReport defect;
    std::optional<OdeCheck> ode;
    std::optional<std::string> ode_failure;
    std::optional<PicardCheck> picard;
    std::optional<OracleComparison> oracle;
    /// |2 a_1 - u''(0)|
    BigReal second_derivative_gap;
    bool passed;
};

struct VerifyOptions {
    std::optional<BigReal> r_max;
    std::size_t ode_steps = kDefaultOdeSteps;
    std::size_t picard_grid = kDefaultPicardGrid;
    std::size_t picard_iterations = kDefaultPicardIterations;
};

VerificationReport verify(const SolutionSeries& sol, const VerifyOptions& options = {});

}  // namespace plaplace
