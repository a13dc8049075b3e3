#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plaplace/big_real.hpp"
#include "plaplace/rational.hpp"
#include "plaplace/series.hpp"

namespace plaplace {

// Expression tree for f(u). Nodes are immutable and shared.
//
// Grammar (version 1):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'u' ('^' exponent)? | fn '(' expr ')' | '(' expr ')' | '-' factor
//   fn       := 'exp' | 'sin' | 'cos' | 'log'
//   rational := integer ('/' positive-integer)?
//   exponent := '-'? rational | '(' '-'? rational ')'
// Decimal literals are rejected; write 41/10, not 4.1.
namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
    Rational value;
};
struct Variable {};
/// u^exponent
struct Power {
    Rational exponent;
};
enum class FunctionKind { Exp, Sin, Cos, Log };
struct Function {
    FunctionKind kind;
    NodePtr arg;
};
struct Negate {
    NodePtr arg;
};
enum class BinaryOp { Add, Sub, Mul };
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};

struct Node {
    std::variant<Constant, Variable, Power, Function, Negate, Binary> value;
};

bool equal(const Node& lhs, const Node& rhs);

}  // namespace ast

inline constexpr int kGrammarVersion = 1;

class Nonlinearity {
public:
    /// Throws SyntaxError (with position) or DecimalLiteralRejected.
    static Nonlinearity parse(std::string_view source);

    const std::string& source() const { return source_; }
    const ast::Node& root() const { return *root_; }
    /// Fully parenthesized canonical form; parses back to an identical tree.
    std::string to_string() const;

    /// True when the tree does not reference u.
    bool is_constant() const;
    /// True when the tree is exactly exp(u).
    bool is_exp_of_u() const;

    /// Point evaluation f(x).
    BigReal operator()(const BigReal& x) const;

    /// Taylor coefficients g_j = f^(j)(alpha)/j!, j = 0..order, obtained by
    /// evaluating the tree in series arithmetic with u -> alpha + t.
    /// Throws NonAnalyticPoint or NegativeBaseFractionalPower.
    std::vector<BigReal> taylor_at(const BigReal& alpha, std::size_t order, int digits) const;
    /// f(alpha) as the constant Taylor coefficient.
    BigReal f_at(const BigReal& alpha, int digits) const;

    friend bool operator==(const Nonlinearity& lhs, const Nonlinearity& rhs) {
        return ast::equal(*lhs.root_, *rhs.root_);
    }

private:
    Nonlinearity(std::string source, ast::NodePtr root) : source_(std::move(source)), root_(std::move(root)) {}

    std::string source_;
    ast::NodePtr root_;
};

}  // namespace plaplace
