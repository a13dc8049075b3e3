#pragma once

#include <string>
#include <vector>

#include "plaplace/big_real.hpp"
#include "plaplace/nonlinearity.hpp"
#include "plaplace/rational.hpp"

namespace plaplace {

/// Radial p-Laplace initial value problem
///
///   phi(u')' + (n-1)/r phi(u') + f(u) = 0,   u(0) = alpha,  u'(0) = 0,
///
/// with phi(v) = v |v|^(p-2).
///
/// Construction enforces p > 1, n >= 1 and that f is analytic at alpha with
/// f(alpha) > 0. Settings outside the classical theory (n < 2, alpha <= 0,
/// 1 < p < 2) are accepted and reported through warnings().
class PLaplaceProblem {
public:
    /// Throws InvalidProblem when a hard requirement fails.
    PLaplaceProblem(Rational p, Rational n, Rational alpha, Nonlinearity f);

    const Rational& p() const { return p_; }
    const Rational& n() const { return n_; }
    const Rational& alpha() const { return alpha_; }
    const Nonlinearity& f() const { return f_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// p/(p-1): the r-exponent of t = z^2.
    Rational r_exponent_per_term() const { return p_ / (p_ - 1); }

private:
    Rational p_;
    Rational n_;
    Rational alpha_;
    Nonlinearity f_;
    std::vector<std::string> warnings_;
};

/// Constants of the transformed equation
///   a u''(z) + A/((p-1) z) u'(z) + z^(p-2)/phi'(u'(z)) f(u) = 0
/// obtained with the substitution z^2 = r^(p/(p-1)).
struct DerivedConstants {
    BigReal alpha_bar;  // p / (2(p-1))
    BigReal beta;       // (2-p)/p
    BigReal gamma;      // 3 - p - 2/p
    BigReal a;          // alpha_bar^p
    BigReal A;          // alpha_bar^p gamma + (n-1) alpha_bar^(p-1)
    int digits;
};

/// Throws DegenerateProblem if a(p-1) + A <= 0.
DerivedConstants derive_constants(const PLaplaceProblem& problem, int digits);
DerivedConstants derive_constants(const Rational& p, const Rational& n, int digits);

/// B_k = 2k(2k-1) a + 2k A/(p-1): the response of the t^(k-1) residual
/// coefficient to the linear terms of a_k t^k.
BigReal big_b(const DerivedConstants& constants, const Rational& p, long k);

/// C_k = 1 + k(p-2) f(alpha) / ((p-1) 2^(p-2) B_k (-a1)^(p-1)).
/// Exactly 1 when p = 2. Throws SignViolation if a1 >= 0.
BigReal big_c(const DerivedConstants& constants, const Rational& p, long k, const BigReal& a1,
              const BigReal& f_alpha);

/// u''(0) of the transformed problem: -[f(alpha)/(a(p-1)+A)]^(1/(p-1)).
BigReal u_second_at_zero(const DerivedConstants& constants, const Rational& p, const BigReal& f_alpha);

}  // namespace plaplace
