#include "plaplace/nonlinearity.hpp"

#include <cctype>
#include <type_traits>

#include "plaplace/errors.hpp"

namespace plaplace {

namespace ast {

bool equal(const Node& lhs, const Node& rhs) {
    if (lhs.value.index() != rhs.value.index()) return false;
    return std::visit(
        [&](const auto& l) -> bool {
            using T = std::decay_t<decltype(l)>;
            const auto& r = std::get<T>(rhs.value);
            if constexpr (std::is_same_v<T, Constant>) {
                return l.value == r.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return true;
            } else if constexpr (std::is_same_v<T, Power>) {
                return l.exponent == r.exponent;
            } else if constexpr (std::is_same_v<T, Function>) {
                return l.kind == r.kind && equal(*l.arg, *r.arg);
            } else if constexpr (std::is_same_v<T, Negate>) {
                return equal(*l.arg, *r.arg);
            } else {
                return l.op == r.op && equal(*l.lhs, *r.lhs) && equal(*l.rhs, *r.rhs);
            }
        },
        lhs.value);
}

}  // namespace ast

namespace {

using namespace ast;

NodePtr make(auto value) { return std::make_shared<const Node>(Node{std::move(value)}); }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr root = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    void reject_decimal(std::size_t start) const {
        throw DecimalLiteralRejected(
            "decimal literal '" + std::string(text_.substr(start, pos_ - start + 1)) +
                "...' rejected; all numbers must be entered as fractions (e.g. 41/10 instead of 4.1)",
            start);
    }

    BigInt integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') reject_decimal(start);
        if (!at_digit()) fail("expected a number");
        while (at_digit()) ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            reject_decimal(start);
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    Rational rational() {
        BigInt num = integer();
        if (!accept('/')) return Rational(num);
        const std::size_t den_pos = pos_;
        BigInt den = integer();
        if (den == 0) throw SyntaxError("zero denominator", den_pos);
        return Rational(num, den);
    }

    Rational signed_rational() {
        const bool negative = accept('-');
        Rational value = rational();
        return negative ? Rational(-value) : value;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = make(Binary{BinaryOp::Add, lhs, term()});
            } else if (accept('-')) {
                lhs = make(Binary{BinaryOp::Sub, lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (accept('*')) lhs = make(Binary{BinaryOp::Mul, lhs, factor()});
        return lhs;
    }

    NodePtr factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return make(Negate{factor()});
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return make(Constant{rational()});
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "u") {
                if (!accept('^')) return make(Variable{});
                if (accept('(')) {
                    Rational q = signed_rational();
                    expect(')');
                    return make(Power{q});
                }
                return make(Power{signed_rational()});
            }
            FunctionKind kind;
            if (name == "exp") {
                kind = FunctionKind::Exp;
            } else if (name == "sin") {
                kind = FunctionKind::Sin;
            } else if (name == "cos") {
                kind = FunctionKind::Cos;
            } else if (name == "log") {
                kind = FunctionKind::Log;
            } else {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            expect('(');
            NodePtr arg = expr();
            expect(')');
            return make(Function{kind, arg});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

const char* function_name(FunctionKind kind) {
    switch (kind) {
        case FunctionKind::Exp: return "exp";
        case FunctionKind::Sin: return "sin";
        case FunctionKind::Cos: return "cos";
        case FunctionKind::Log: return "log";
    }
    return "?";
}

std::string print(const Node& node) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return format_rational(n.value);
            } else if constexpr (std::is_same_v<T, Variable>) {
                return "u";
            } else if constexpr (std::is_same_v<T, Power>) {
                return "u^" + format_rational(n.exponent);
            } else if constexpr (std::is_same_v<T, Function>) {
                return std::string(function_name(n.kind)) + "(" + print(*n.arg) + ")";
            } else if constexpr (std::is_same_v<T, Negate>) {
                return "-(" + print(*n.arg) + ")";
            } else {
                const char* op = n.op == BinaryOp::Add ? " + " : n.op == BinaryOp::Sub ? " - " : " * ";
                return "(" + print(*n.lhs) + op + print(*n.rhs) + ")";
            }
        },
        node.value);
}

bool references_u(const Node& node) {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return false;
            } else if constexpr (std::is_same_v<T, Variable> || std::is_same_v<T, Power>) {
                return true;
            } else if constexpr (std::is_same_v<T, Function> || std::is_same_v<T, Negate>) {
                return references_u(*n.arg);
            } else {
                return references_u(*n.lhs) || references_u(*n.rhs);
            }
        },
        node.value);
}

// Shared analyticity rules for u^q at the point x.
void check_power_domain(const BigReal& x, const Rational& q) {
    if (x.sign() > 0) return;
    if (is_integer(q)) {
        if (x.is_zero() && q < 0) {
            throw NonAnalyticPoint("u^" + format_rational(q) + " is singular at u = 0");
        }
        return;
    }
    if (x.is_zero()) throw NonAnalyticPoint("u^" + format_rational(q) + " is not analytic at u = 0");
    throw NegativeBaseFractionalPower("u^" + format_rational(q) + " needs u > 0, got u = " + x.to_string(12));
}

BigReal eval_point(const Node& node, const BigReal& x) {
    const int digits = x.digits();
    return std::visit(
        [&](const auto& n) -> BigReal {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return BigReal(n.value, digits);
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x;
            } else if constexpr (std::is_same_v<T, Power>) {
                check_power_domain(x, n.exponent);
                if (is_integer(n.exponent)) {
                    return pow(x, static_cast<long>(boost::multiprecision::numerator(n.exponent)));
                }
                return pow(x, BigReal(n.exponent, digits));
            } else if constexpr (std::is_same_v<T, Function>) {
                const BigReal arg = eval_point(*n.arg, x);
                switch (n.kind) {
                    case FunctionKind::Exp: return exp(arg);
                    case FunctionKind::Sin: return sin(arg);
                    case FunctionKind::Cos: return cos(arg);
                    case FunctionKind::Log:
                        if (arg.sign() <= 0) throw NonAnalyticPoint("log of non-positive value " + arg.to_string(12));
                        return log(arg);
                }
                return arg;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_point(*n.arg, x);
            } else {
                const BigReal lhs = eval_point(*n.lhs, x);
                const BigReal rhs = eval_point(*n.rhs, x);
                switch (n.op) {
                    case BinaryOp::Add: return lhs + rhs;
                    case BinaryOp::Sub: return lhs - rhs;
                    case BinaryOp::Mul: return lhs * rhs;
                }
                return lhs;
            }
        },
        node.value);
}

// (alpha + t)^q through order `order`.
Series power_series(const BigReal& alpha, const Rational& q, std::size_t order, int digits) {
    check_power_domain(alpha, q);
    const Series base = Series::shifted_variable(alpha, order, digits);
    if (alpha.sign() > 0) return real_pow(base, BigReal(q, digits));
    // Integer exponent at alpha <= 0 (other cases were rejected above).
    const long n = static_cast<long>(boost::multiprecision::numerator(q));
    if (alpha.is_zero()) {
        // t^n with n >= 0.
        Series out = Series::zero(order, digits);
        std::vector<BigReal> c(out.coeffs().begin(), out.coeffs().end());
        if (static_cast<std::size_t>(n) <= order) c[static_cast<std::size_t>(n)] = BigReal(1, digits);
        return Series(std::move(c), digits);
    }
    // (alpha + t)^n = (-1)^n (-alpha - t)^n with -alpha > 0.
    const Series flipped = real_pow(-base, BigReal(n, digits));
    return n % 2 == 0 ? flipped : -flipped;
}

Series eval_series(const Node& node, const BigReal& alpha, std::size_t order, int digits) {
    return std::visit(
        [&](const auto& n) -> Series {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return Series::constant(BigReal(n.value, digits), order, digits);
            } else if constexpr (std::is_same_v<T, Variable>) {
                return Series::shifted_variable(alpha, order, digits);
            } else if constexpr (std::is_same_v<T, Power>) {
                return power_series(alpha, n.exponent, order, digits);
            } else if constexpr (std::is_same_v<T, Function>) {
                const Series inner = eval_series(*n.arg, alpha, order, digits);
                const BigReal& x = inner.coefficient(0);
                switch (n.kind) {
                    case FunctionKind::Exp: return compose_analytic(exp_taylor(x, order), inner);
                    case FunctionKind::Sin: return compose_analytic(sin_taylor(x, order), inner);
                    case FunctionKind::Cos: return compose_analytic(cos_taylor(x, order), inner);
                    case FunctionKind::Log: return compose_analytic(log_taylor(x, order), inner);
                }
                return inner;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_series(*n.arg, alpha, order, digits);
            } else {
                const Series lhs = eval_series(*n.lhs, alpha, order, digits);
                const Series rhs = eval_series(*n.rhs, alpha, order, digits);
                switch (n.op) {
                    case BinaryOp::Add: return lhs + rhs;
                    case BinaryOp::Sub: return lhs - rhs;
                    case BinaryOp::Mul: return lhs * rhs;
                }
                return lhs;
            }
        },
        node.value);
}

}  // namespace

Nonlinearity Nonlinearity::parse(std::string_view source) {
    Parser parser(source);
    NodePtr root = parser.parse();
    return Nonlinearity(std::string(source), std::move(root));
}

std::string Nonlinearity::to_string() const { return print(*root_); }

bool Nonlinearity::is_constant() const { return !references_u(*root_); }

bool Nonlinearity::is_exp_of_u() const {
    const auto* fn = std::get_if<Function>(&root_->value);
    return fn != nullptr && fn->kind == FunctionKind::Exp && std::holds_alternative<Variable>(fn->arg->value);
}

BigReal Nonlinearity::operator()(const BigReal& x) const { return eval_point(*root_, x); }

std::vector<BigReal> Nonlinearity::taylor_at(const BigReal& alpha, std::size_t order, int digits) const {
    const Series s = eval_series(*root_, alpha.with_digits(digits), order, digits);
    return {s.coeffs().begin(), s.coeffs().end()};
}

BigReal Nonlinearity::f_at(const BigReal& alpha, int digits) const { return taylor_at(alpha, 0, digits)[0]; }

}  // namespace plaplace
