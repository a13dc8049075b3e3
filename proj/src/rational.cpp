#include "plaplace/rational.hpp"

#include <cctype>

#include "plaplace/errors.hpp"

namespace plaplace {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos) {
        throw InvalidArgument("'" + original +
                              "' is not an exact fraction; enter decimals as fractions, e.g. 41/10 "
                              "instead of 4.1");
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InvalidArgument("malformed rational '" + original + "'");
    }
    const BigInt d{std::string(den)};
    if (d == 0) throw InvalidArgument("zero denominator in '" + original + "'");
    Rational out(BigInt{std::string(num)}, d);
    return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

}  // namespace plaplace
