#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "plaplace/rational.hpp"

namespace plaplace {

/// Default working precision in decimal digits.
inline constexpr int kDefaultDigits = 64;

/// Smallest working precision accepted anywhere in the library.
inline constexpr int kMinDigits = 32;

/// Number of mantissa bits used for a precision of `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// Arbitrary-precision real number backed by MPFR, rounding to nearest.
///
/// Every value carries its precision in decimal digits. Binary operations
/// produce a result at the larger of the two operand precisions, so mixing
/// values never silently loses digits. All operations are deterministic:
/// identical inputs at identical precision give bit-identical results.
class BigReal {
public:
    explicit BigReal(int digits = kDefaultDigits);
    BigReal(long value, int digits);
    BigReal(const Rational& value, int digits);
    /// Parses a decimal or scientific literal ("1.25e-3"). Throws on junk.
    static BigReal from_string(std::string_view text, int digits);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    int digits() const { return digits_; }
    /// Same value re-rounded to `digits`.
    BigReal with_digits(int digits) const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Scientific notation with `significant` digits (default: digits()).
    std::string to_string(int significant = 0) const;

    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);
    BigReal operator-() const;

    friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
    friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
    friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
    friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }

    BigReal& operator*=(long rhs);
    BigReal& operator/=(long rhs);
    friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
    friend BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
    friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }

    friend bool operator==(const BigReal& lhs, const BigReal& rhs);
    friend std::partial_ordering operator<=>(const BigReal& lhs, const BigReal& rhs);

    friend BigReal abs(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal exp(const BigReal& x);
    friend BigReal log(const BigReal& x);
    friend BigReal sin(const BigReal& x);
    friend BigReal cos(const BigReal& x);
    /// x^y for x > 0 (or x == 0 with y > 0).
    friend BigReal pow(const BigReal& x, const BigReal& y);
    friend BigReal pow(const BigReal& x, long n);

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

private:
    mpfr_t value_;
    int digits_;
};

BigReal max(const BigReal& lhs, const BigReal& rhs);

/// 10^exponent at the given precision.
BigReal power_of_ten(long exponent, int digits);

}  // namespace plaplace
