#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plaplace/big_real.hpp"

namespace plaplace {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N in t = z^2.
///
/// The coefficients beyond t^N are *unknown*, not zero. Binary operations
/// therefore return a series whose order is the smaller of the operand
/// orders. All coefficients are stored at the series precision, and binary
/// operations require both operands to share it.
class Series {
public:
    /// Series from explicit coefficients; order = coeffs.size() - 1.
    Series(std::vector<BigReal> coeffs, int digits);

    static Series zero(std::size_t order, int digits);
    static Series constant(const BigReal& value, std::size_t order, int digits);
    /// c + t, truncated at `order` (order >= 1 keeps the linear term).
    static Series shifted_variable(const BigReal& c, std::size_t order, int digits);
    /// Polynomial with the given coefficients, zero-padded or clipped to `order`.
    /// Unlike the main constructor the padding zeros are exact.
    static Series polynomial(std::span<const BigReal> coeffs, std::size_t order, int digits);

    std::size_t order() const { return coeffs_.size() - 1; }
    int digits() const { return digits_; }
    std::span<const BigReal> coeffs() const { return coeffs_; }

    /// Stored coefficient of t^j. Throws IndexOutOfRange for j > order().
    const BigReal& coefficient(std::size_t j) const;
    /// Horner evaluation of the truncated polynomial.
    BigReal evaluate(const BigReal& t) const;

    /// Same coefficients, clipped to a lower order.
    Series truncate(std::size_t order) const;
    /// d/dt; order drops by one (order 0 gives the zero series of order 0).
    Series derivative() const;
    /// t * s; order grows by one with an exact zero constant term.
    Series times_t() const;

    Series operator-() const;

    friend Series add(const Series& lhs, const Series& rhs);
    friend Series sub(const Series& lhs, const Series& rhs);
    friend Series scale(const Series& s, const BigReal& c);
    friend Series mul(const Series& lhs, const Series& rhs);

private:
    std::vector<BigReal> coeffs_;
    int digits_;
};

Series add(const Series& lhs, const Series& rhs);
Series sub(const Series& lhs, const Series& rhs);
Series scale(const Series& s, const BigReal& c);
/// Cauchy product truncated at min(N1, N2).
Series mul(const Series& lhs, const Series& rhs);

inline Series operator+(const Series& lhs, const Series& rhs) { return add(lhs, rhs); }
inline Series operator-(const Series& lhs, const Series& rhs) { return sub(lhs, rhs); }
inline Series operator*(const Series& lhs, const Series& rhs) { return mul(lhs, rhs); }
inline Series operator*(const Series& s, const BigReal& c) { return scale(s, c); }
inline Series operator*(const BigReal& c, const Series& s) { return scale(s, c); }

/// s^rho for s with strictly positive constant term.
///
/// Uses the recurrence obtained from P' s = rho s' P:
///   p_0 = c_0^rho,  p_j = 1/(j c_0) * sum_{i=1..j} ((rho+1) i - j) c_i p_{j-i}.
/// Throws NonPositiveLeadingCoefficient when c_0 <= 0.
Series real_pow(const Series& s, const BigReal& rho);

/// g(s) where g_taylor[m] = g^(m)(c_0)/m! are the Taylor coefficients of g
/// at the constant term of s. Evaluated as a Horner scheme in (s - c_0),
/// which has zero constant term, so the result is exact through order N.
/// Throws InsufficientTaylorLength if fewer than N+1 coefficients are given.
Series compose_analytic(std::span<const BigReal> g_taylor, const Series& s);

/// Taylor coefficients of the elementary functions at x, up to t^order.
std::vector<BigReal> exp_taylor(const BigReal& x, std::size_t order);
std::vector<BigReal> log_taylor(const BigReal& x, std::size_t order);
std::vector<BigReal> sin_taylor(const BigReal& x, std::size_t order);
std::vector<BigReal> cos_taylor(const BigReal& x, std::size_t order);

}  // namespace plaplace
