#include "plaplace/series.hpp"

#include <algorithm>
#include <string>

#include "plaplace/errors.hpp"

namespace plaplace {

namespace {

void require_same_digits(const Series& lhs, const Series& rhs) {
    if (lhs.digits() != rhs.digits()) {
        throw PrecisionMismatch("series precision mismatch: " + std::to_string(lhs.digits()) +
                                " vs " + std::to_string(rhs.digits()) + " digits");
    }
}

}  // namespace

Series::Series(std::vector<BigReal> coeffs, int digits) : coeffs_(std::move(coeffs)), digits_(digits) {
    if (coeffs_.empty()) throw InvalidArgument("a series needs at least one coefficient");
    for (auto& c : coeffs_) {
        if (c.digits() != digits_) c = c.with_digits(digits_);
    }
}

Series Series::zero(std::size_t order, int digits) {
    return Series(std::vector<BigReal>(order + 1, BigReal(digits)), digits);
}

Series Series::constant(const BigReal& value, std::size_t order, int digits) {
    std::vector<BigReal> c(order + 1, BigReal(digits));
    c[0] = value.with_digits(digits);
    return Series(std::move(c), digits);
}

Series Series::shifted_variable(const BigReal& c, std::size_t order, int digits) {
    Series out = constant(c, order, digits);
    if (order >= 1) out.coeffs_[1] = BigReal(1, digits);
    return out;
}

Series Series::polynomial(std::span<const BigReal> coeffs, std::size_t order, int digits) {
    std::vector<BigReal> c(order + 1, BigReal(digits));
    const std::size_t n = std::min(coeffs.size(), order + 1);
    for (std::size_t j = 0; j < n; ++j) c[j] = coeffs[j].with_digits(digits);
    return Series(std::move(c), digits);
}

const BigReal& Series::coefficient(std::size_t j) const {
    if (j >= coeffs_.size()) {
        throw IndexOutOfRange("coefficient index " + std::to_string(j) + " exceeds series order " +
                              std::to_string(order()));
    }
    return coeffs_[j];
}

BigReal Series::evaluate(const BigReal& t) const {
    BigReal acc = coeffs_.back();
    for (std::size_t j = coeffs_.size() - 1; j-- > 0;) {
        acc *= t;
        acc += coeffs_[j];
    }
    return acc;
}

Series Series::truncate(std::size_t order) const {
    if (order > this->order()) {
        throw IndexOutOfRange("cannot truncate order " + std::to_string(this->order()) + " series to order " +
                              std::to_string(order));
    }
    return Series(std::vector<BigReal>(coeffs_.begin(), coeffs_.begin() + order + 1), digits_);
}

Series Series::derivative() const {
    if (coeffs_.size() == 1) return zero(0, digits_);
    std::vector<BigReal> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) c.push_back(coeffs_[j] * static_cast<long>(j));
    return Series(std::move(c), digits_);
}

Series Series::times_t() const {
    std::vector<BigReal> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back(digits_);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(c), digits_);
}

Series Series::operator-() const {
    std::vector<BigReal> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return Series(std::move(c), digits_);
}

Series add(const Series& lhs, const Series& rhs) {
    require_same_digits(lhs, rhs);
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::vector<BigReal> c;
    c.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c.push_back(lhs.coeffs_[j] + rhs.coeffs_[j]);
    return Series(std::move(c), lhs.digits_);
}

Series sub(const Series& lhs, const Series& rhs) {
    require_same_digits(lhs, rhs);
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::vector<BigReal> c;
    c.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c.push_back(lhs.coeffs_[j] - rhs.coeffs_[j]);
    return Series(std::move(c), lhs.digits_);
}

Series scale(const Series& s, const BigReal& c) {
    if (c.digits() != s.digits_) {
        throw PrecisionMismatch("scalar precision " + std::to_string(c.digits()) +
                                " does not match series precision " + std::to_string(s.digits_));
    }
    std::vector<BigReal> out;
    out.reserve(s.coeffs_.size());
    for (const auto& x : s.coeffs_) out.push_back(x * c);
    return Series(std::move(out), s.digits_);
}

Series mul(const Series& lhs, const Series& rhs) {
    require_same_digits(lhs, rhs);
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::vector<BigReal> c(n + 1, BigReal(lhs.digits_));
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) c[j] += lhs.coeffs_[i] * rhs.coeffs_[j - i];
    }
    return Series(std::move(c), lhs.digits_);
}

Series real_pow(const Series& s, const BigReal& rho) {
    const auto c = s.coeffs();
    if (c[0].sign() <= 0) {
        throw NonPositiveLeadingCoefficient("real_pow needs a positive constant term, got " +
                                            c[0].to_string(12));
    }
    const int digits = s.digits();
    const BigReal r = rho.with_digits(digits);
    const BigReal r_plus_one = r + BigReal(1, digits);
    std::vector<BigReal> p;
    p.reserve(c.size());
    p.push_back(pow(c[0], r));
    for (std::size_t j = 1; j < c.size(); ++j) {
        BigReal acc(digits);
        for (std::size_t i = 1; i <= j; ++i) {
            const BigReal weight = r_plus_one * static_cast<long>(i) - BigReal(static_cast<long>(j), digits);
            acc += weight * c[i] * p[j - i];
        }
        acc /= c[0];
        acc /= static_cast<long>(j);
        p.push_back(std::move(acc));
    }
    return Series(std::move(p), digits);
}

Series compose_analytic(std::span<const BigReal> g_taylor, const Series& s) {
    const std::size_t n = s.order();
    if (g_taylor.size() < n + 1) {
        throw InsufficientTaylorLength("composition to order " + std::to_string(n) + " needs " +
                                       std::to_string(n + 1) + " Taylor coefficients, got " +
                                       std::to_string(g_taylor.size()));
    }
    const int digits = s.digits();
    std::vector<BigReal> h(s.coeffs().begin(), s.coeffs().end());
    h[0] = BigReal(digits);
    const Series increment(std::move(h), digits);

    Series acc = Series::constant(g_taylor[n], n, digits);
    for (std::size_t m = n; m-- > 0;) {
        acc = mul(acc, increment);
        std::vector<BigReal> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += g_taylor[m].with_digits(digits);
        acc = Series(std::move(c), digits);
    }
    return acc;
}

std::vector<BigReal> exp_taylor(const BigReal& x, std::size_t order) {
    std::vector<BigReal> g;
    g.reserve(order + 1);
    g.push_back(exp(x));
    for (std::size_t m = 1; m <= order; ++m) g.push_back(g.back() / static_cast<long>(m));
    return g;
}

std::vector<BigReal> log_taylor(const BigReal& x, std::size_t order) {
    if (x.sign() <= 0) throw NonAnalyticPoint("log is not analytic at " + x.to_string(12));
    std::vector<BigReal> g;
    g.reserve(order + 1);
    g.push_back(log(x));
    const BigReal inv = BigReal(1, x.digits()) / x;
    BigReal power = inv;  // x^{-m}
    for (std::size_t m = 1; m <= order; ++m) {
        BigReal term = power / static_cast<long>(m);
        g.push_back(m % 2 == 1 ? term : -term);
        power *= inv;
    }
    return g;
}

namespace {

// Taylor coefficients from a 4-periodic derivative cycle.
std::vector<BigReal> periodic_taylor(const BigReal (&cycle)[4], std::size_t order) {
    std::vector<BigReal> g;
    g.reserve(order + 1);
    BigReal inv_factorial(1, cycle[0].digits());
    for (std::size_t m = 0; m <= order; ++m) {
        if (m > 0) inv_factorial /= static_cast<long>(m);
        g.push_back(cycle[m % 4] * inv_factorial);
    }
    return g;
}

}  // namespace

std::vector<BigReal> sin_taylor(const BigReal& x, std::size_t order) {
    const BigReal s = sin(x);
    const BigReal c = cos(x);
    const BigReal cycle[4] = {s, c, -s, -c};
    return periodic_taylor(cycle, order);
}

std::vector<BigReal> cos_taylor(const BigReal& x, std::size_t order) {
    const BigReal s = sin(x);
    const BigReal c = cos(x);
    const BigReal cycle[4] = {c, -s, -c, s};
    return periodic_taylor(cycle, order);
}

}  // namespace plaplace
