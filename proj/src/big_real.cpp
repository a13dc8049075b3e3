#include "plaplace/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "plaplace/errors.hpp"

namespace plaplace {

namespace {

constexpr mpfr_prec_t kGuardBits = 16;

void set_integer(mpfr_ptr target, const BigInt& value) {
    const std::string text = value.str();
    mpfr_set_str(target, text.c_str(), 10, MPFR_RNDN);
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 1) throw InvalidArgument("precision must be a positive number of digits");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
}

BigReal::BigReal(int digits) : digits_(digits) {
    mpfr_init2(value_, bits_for_digits(digits));
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) {
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, int digits) : BigReal(digits) {
    set_integer(value_, boost::multiprecision::numerator(value));
    mpfr_t den;
    mpfr_init2(den, bits_for_digits(digits));
    set_integer(den, boost::multiprecision::denominator(value));
    mpfr_div(value_, value_, den, MPFR_RNDN);
    mpfr_clear(den);
}

BigReal BigReal::from_string(std::string_view text, int digits) {
    BigReal out(digits);
    const std::string owned(text);
    char* end = nullptr;
    if (!owned.empty()) mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
    if (owned.empty() || end != owned.c_str() + owned.size()) {
        throw InvalidArgument("not a decimal number: '" + owned + "'");
    }
    return out;
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
    // Steal the limbs and leave `other` as a valid minimal-precision zero.
    *value_ = *other.value_;
    mpfr_init2(other.value_, MPFR_PREC_MIN);
    mpfr_set_zero(other.value_, 1);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_digits(int digits) const {
    BigReal out(digits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

std::string BigReal::to_string(int significant) const {
    if (significant <= 0) significant = digits_;
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Re", significant - 1, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

namespace {

// Widens `target` in place so that a binary result carries the larger precision.
void widen(BigReal& target, const BigReal& other) {
    if (other.digits() > target.digits()) target = target.with_digits(other.digits());
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
    widen(*this, rhs);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
    widen(*this, rhs);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
    widen(*this, rhs);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
    widen(*this, rhs);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator-() const {
    BigReal out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

bool operator==(const BigReal& lhs, const BigReal& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
}

std::partial_ordering operator<=>(const BigReal& lhs, const BigReal& rhs) {
    if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

BigReal abs(const BigReal& x) {
    BigReal out(x);
    mpfr_abs(out.value_, out.value_, MPFR_RNDN);
    return out;
}

BigReal sqrt(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigReal exp(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_exp(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigReal log(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_log(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigReal sin(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_sin(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigReal cos(const BigReal& x) {
    BigReal out(x.digits_);
    mpfr_cos(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal out(std::max(x.digits_, y.digits_));
    mpfr_pow(out.value_, x.value_, y.value_, MPFR_RNDN);
    return out;
}

BigReal pow(const BigReal& x, long n) {
    BigReal out(x.digits_);
    mpfr_pow_si(out.value_, x.value_, n, MPFR_RNDN);
    return out;
}

BigReal max(const BigReal& lhs, const BigReal& rhs) { return lhs < rhs ? rhs : lhs; }

BigReal power_of_ten(long exponent, int digits) {
    return pow(BigReal(10, digits), exponent);
}

}  // namespace plaplace
