#include <doctest.h>

#include "plaplace/errors.hpp"
#include "plaplace/nonlinearity.hpp"
#include "test_support.hpp"

using namespace plaplace;
using namespace plaplace::test;

namespace {

constexpr int kDigits = kDefaultDigits;

// Central finite differences of the point evaluation, independent of the
// series path. Step 10^(-digits/4), evaluated at twice the precision so the
// h^-j amplification of rounding stays far below the O(h^2) truncation.
BigReal finite_difference(const Nonlinearity& f, const BigReal& x_in, int j, int step_digits) {
    const int digits = 2 * step_digits;
    const BigReal x = x_in.with_digits(digits);
    const BigReal h = power_of_ten(-(step_digits / 4), digits);
    // Binomial stencil: f^(j)(x) ~ h^-j sum_i (-1)^i C(j,i) f(x + (j/2 - i) h)
    BigReal acc(digits);
    long binom = 1;
    for (int i = 0; i <= j; ++i) {
        const BigReal offset = (BigReal(j, digits) / 2 - BigReal(i, digits)) * h;
        BigReal term = f(x + offset) * binom;
        acc += i % 2 == 0 ? term : -term;
        binom = binom * (j - i) / (i + 1);
    }
    return acc / pow(h, static_cast<long>(j));
}

}  // namespace

TEST_CASE("parse accepts the grammar") {
    const auto f = Nonlinearity::parse("exp(u)");
    CHECK(f.is_exp_of_u());
    CHECK(f.to_string() == "exp(u)");

    const auto g = Nonlinearity::parse("u^3 - 2*u + 1/2");
    CHECK(g.to_string() == "((u^3 - (2 * u)) + 1/2)");
    CHECK_FALSE(g.is_constant());

    CHECK(Nonlinearity::parse("  -u^2 ").to_string() == "-(u^2)");
    CHECK(Nonlinearity::parse("u^-1").to_string() == "u^-1");
    CHECK(Nonlinearity::parse("u^(41/10)").to_string() == "u^41/10");
    CHECK(Nonlinearity::parse("3/2").is_constant());
    CHECK(Nonlinearity::parse("sin(cos(log(u)))*(1+u)").to_string() == "(sin(cos(log(u))) * (1 + u))");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Nonlinearity::parse("0.5*u"), DecimalLiteralRejected);
    CHECK_THROWS_AS(Nonlinearity::parse("u + .5"), DecimalLiteralRejected);
    CHECK_THROWS_AS(Nonlinearity::parse("u^2.5"), DecimalLiteralRejected);
    try {
        Nonlinearity::parse("exp(u) + tan(u)");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 9);
    }
    CHECK_THROWS_AS(Nonlinearity::parse("exp(u"), SyntaxError);
    CHECK_THROWS_AS(Nonlinearity::parse("u u"), SyntaxError);
    CHECK_THROWS_AS(Nonlinearity::parse(""), SyntaxError);
    CHECK_THROWS_AS(Nonlinearity::parse("1/0"), SyntaxError);
    CHECK_THROWS_AS(Nonlinearity::parse("u^u"), SyntaxError);
}

TEST_CASE("print then parse round-trips to an identical tree") {
    for (const char* source : {"exp(u)", "u^3 - 2*u + 1/2", "-u*-u", "sin(u)*cos(u) - log(1 + u^2)",
                               "u^-7/3 + 4", "((u))", "-(-(u))", "exp(-u) * (u - 1/3) * 2"}) {
        const auto f = Nonlinearity::parse(source);
        const auto g = Nonlinearity::parse(f.to_string());
        CHECK(f == g);
        CHECK(g.to_string() == f.to_string());
    }
}

TEST_CASE("taylor_at matches known expansions") {
    const BigReal e = exp(BigReal(1, kDigits));
    const auto ex = Nonlinearity::parse("exp(u)").taylor_at(BigReal(1, kDigits), 3, kDigits);
    CHECK(close(ex[0], e, tol(-60)));
    CHECK(close(ex[1], e, tol(-60)));
    CHECK(close(ex[2], e / 2, tol(-60)));
    CHECK(close(ex[3], e / 6, tol(-60)));

    const auto cube = Nonlinearity::parse("u^3").taylor_at(BigReal(2, kDigits), 3, kDigits);
    CHECK(close(cube[0], BigReal(8, kDigits), tol(-60)));
    CHECK(close(cube[1], BigReal(12, kDigits), tol(-60)));
    CHECK(close(cube[2], BigReal(6, kDigits), tol(-60)));
    CHECK(close(cube[3], BigReal(1, kDigits), tol(-60)));

    // d^j/du^j u^q at 1 = q (q-1) ... (q-j+1)
    const auto frac = Nonlinearity::parse("u^41/10").taylor_at(BigReal(1, kDigits), 2, kDigits);
    CHECK(close(frac[0], BigReal(1, kDigits), tol(-60)));
    CHECK(close(frac[1], R("41/10"), tol(-60)));
    CHECK(close(frac[2], R("41/10") * R("31/10") / 2, tol(-60)));
}

TEST_CASE("taylor_at of exp(u) is e^alpha / j!") {
    const BigReal alpha = R("-7/3");
    const auto g = Nonlinearity::parse("exp(u)").taylor_at(alpha, 12, kDigits);
    BigReal expected = exp(alpha);
    for (std::size_t j = 0; j <= 12; ++j) {
        if (j > 0) expected = expected / static_cast<long>(j);
        CHECK(rel_close(g[j], expected, tol(-60)));
    }
}

TEST_CASE("taylor_at agrees with finite differences") {
    constexpr int digits = 64;
    const BigReal alpha = R("3/4", digits);
    for (const char* source : {"exp(u)", "u^3 - 2*u + 1/2", "sin(u) * log(1 + u)", "u^41/10 + cos(2*u)",
                               "exp(-u^2) * u^-1"}) {
        INFO(source);
        const auto f = Nonlinearity::parse(source);
        const auto g = f.taylor_at(alpha, 4, digits);
        BigReal factorial(1, digits);
        for (int j = 0; j <= 4; ++j) {
            if (j > 0) factorial *= j;
            CHECK(close(g[static_cast<std::size_t>(j)] * factorial, finite_difference(f, alpha, j, digits),
                        tol(-8, digits)));
        }
    }
}

TEST_CASE("f_at evaluates the constant term") {
    CHECK(close(Nonlinearity::parse("exp(u)").f_at(BigReal(1, kDigits), kDigits), exp(BigReal(1, kDigits)),
                tol(-62)));
    CHECK(Nonlinearity::parse("1").f_at(BigReal(5, kDigits), kDigits) == BigReal(1, kDigits));
    CHECK(Nonlinearity::parse("u^3 - 2*u").f_at(BigReal(2, kDigits), kDigits) == BigReal(4, kDigits));
}

TEST_CASE("analyticity errors") {
    CHECK_THROWS_AS(Nonlinearity::parse("u^1/2").taylor_at(BigReal(-1, kDigits), 2, kDigits),
                    NegativeBaseFractionalPower);
    CHECK_THROWS_AS(Nonlinearity::parse("u^1/2").taylor_at(BigReal(0, kDigits), 2, kDigits), NonAnalyticPoint);
    CHECK_THROWS_AS(Nonlinearity::parse("u^-2").taylor_at(BigReal(0, kDigits), 2, kDigits), NonAnalyticPoint);
    CHECK_THROWS_AS(Nonlinearity::parse("log(u)").taylor_at(BigReal(-1, kDigits), 2, kDigits), NonAnalyticPoint);
    CHECK_THROWS_AS(Nonlinearity::parse("u^1/2")(BigReal(-1, kDigits)), NegativeBaseFractionalPower);
}

TEST_CASE("integer powers at non-positive points") {
    const auto cube = Nonlinearity::parse("u^3").taylor_at(BigReal(-2, kDigits), 3, kDigits);
    CHECK(close(cube[0], BigReal(-8, kDigits), tol(-60)));
    CHECK(close(cube[1], BigReal(12, kDigits), tol(-60)));
    CHECK(close(cube[2], BigReal(-6, kDigits), tol(-60)));
    CHECK(close(cube[3], BigReal(1, kDigits), tol(-60)));

    const auto sq = Nonlinearity::parse("u^2").taylor_at(BigReal(0, kDigits), 3, kDigits);
    CHECK(sq[0].is_zero());
    CHECK(sq[1].is_zero());
    CHECK(sq[2] == BigReal(1, kDigits));

    // 1/u at -2: -1/2, -1/4, -1/8
    const auto inv = Nonlinearity::parse("u^-1").taylor_at(BigReal(-2, kDigits), 2, kDigits);
    CHECK(close(inv[0], R("-1/2"), tol(-60)));
    CHECK(close(inv[1], R("-1/4"), tol(-60)));
    CHECK(close(inv[2], R("-1/8"), tol(-60)));
}
