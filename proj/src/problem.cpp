#include "plaplace/problem.hpp"

#include "plaplace/errors.hpp"

namespace plaplace {

namespace {

// f(alpha) is checked at a fixed modest precision; solvers recompute it at
// their working precision.
constexpr int kCheckDigits = 40;

}  // namespace

PLaplaceProblem::PLaplaceProblem(Rational p, Rational n, Rational alpha, Nonlinearity f)
    : p_(std::move(p)), n_(std::move(n)), alpha_(std::move(alpha)), f_(std::move(f)) {
    if (p_ <= 1) throw InvalidProblem("p must exceed 1, got " + format_rational(p_));
    if (n_ < 1) throw InvalidProblem("dimension n must be at least 1, got " + format_rational(n_));

    BigReal f_alpha(kCheckDigits);
    try {
        f_alpha = f_.f_at(BigReal(alpha_, kCheckDigits), kCheckDigits);
    } catch (const Error& e) {
        throw InvalidProblem(std::string("f is not analytic at alpha: ") + e.what());
    }
    if (f_alpha.sign() < 0) {
        throw InvalidProblem("f(alpha) = " + f_alpha.to_string(12) +
                             " < 0; the f(alpha) < 0 branch (u''(0) > 0) is not supported");
    }
    if (f_alpha.is_zero()) throw InvalidProblem("f(alpha) = 0; the series construction needs f(alpha) > 0");

    if (n_ < 2) warnings_.push_back("n = " + format_rational(n_) + " < 2 lies outside the R^n, n >= 2 setting");
    if (alpha_ <= 0) warnings_.push_back("alpha = " + format_rational(alpha_) + " <= 0; the theory assumes alpha > 0");
    if (p_ < 2) {
        warnings_.push_back("1 < p < 2 is outside the p > 2 regularity theory; coefficients are computed "
                            "by the same recursion without a proof of validity");
    }
}

DerivedConstants derive_constants(const Rational& p, const Rational& n, int digits) {
    const Rational alpha_bar = p / (2 * (p - 1));
    const Rational beta = (2 - p) / p;
    const Rational gamma = 3 - p - Rational(2) / p;

    const BigReal alpha_bar_real(alpha_bar, digits);
    const BigReal p_real(p, digits);
    const BigReal a = pow(alpha_bar_real, p_real);
    const BigReal A = a * BigReal(gamma, digits) +
                      BigReal(n - 1, digits) * pow(alpha_bar_real, p_real - BigReal(1, digits));

    DerivedConstants out{alpha_bar_real, BigReal(beta, digits), BigReal(gamma, digits), a, A, digits};
    if (a.sign() <= 0 || (a * BigReal(p - 1, digits) + A).sign() <= 0) {
        throw DegenerateProblem("a(p-1) + A must be positive for p = " + format_rational(p) +
                                ", n = " + format_rational(n));
    }
    return out;
}

DerivedConstants derive_constants(const PLaplaceProblem& problem, int digits) {
    return derive_constants(problem.p(), problem.n(), digits);
}

BigReal big_b(const DerivedConstants& constants, const Rational& p, long k) {
    const int digits = constants.digits;
    return constants.a * (2 * k * (2 * k - 1)) + constants.A * (2 * k) / BigReal(p - 1, digits);
}

BigReal big_c(const DerivedConstants& constants, const Rational& p, long k, const BigReal& a1,
              const BigReal& f_alpha) {
    if (a1.sign() >= 0) throw SignViolation("C_k needs a1 < 0, got " + a1.to_string(12));
    const int digits = constants.digits;
    if (p == 2) return BigReal(1, digits);
    const BigReal p_minus_one(p - 1, digits);
    const BigReal two_pow = pow(BigReal(2, digits), BigReal(p - 2, digits));
    const BigReal denominator = p_minus_one * two_pow * big_b(constants, p, k) * pow(-a1, p_minus_one);
    return BigReal(1, digits) + BigReal(p - 2, digits) * k * f_alpha / denominator;
}

BigReal u_second_at_zero(const DerivedConstants& constants, const Rational& p, const BigReal& f_alpha) {
    const int digits = constants.digits;
    const BigReal p_minus_one(p - 1, digits);
    const BigReal base = f_alpha / (constants.a * p_minus_one + constants.A);
    return -pow(base, BigReal(1, digits) / p_minus_one);
}

}  // namespace plaplace
