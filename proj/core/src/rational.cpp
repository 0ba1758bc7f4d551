#include "bollobas/rational.hpp"

#include <cctype>

#include "bollobas/errors.hpp"

namespace bollobas {

namespace {

BigInt parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
            throw InvalidInput("malformed rational '" + std::string(text) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string to_string(const BigInt& value) { return value.str(); }

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den))
                     : boost::multiprecision::cpp_rational(num, den);
}

ExactRational ExactRational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_integer(text));
    return ExactRational(parse_integer(trim(text.substr(0, slash))),
                         parse_integer(trim(text.substr(slash + 1))));
}

BigInt ExactRational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt ExactRational::denominator() const { return boost::multiprecision::denominator(value_); }

int ExactRational::sign() const { return value_.sign(); }

std::string ExactRational::to_string() const {
    return numerator().str() + "/" + denominator().str();
}

std::string ExactRational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator();
    const BigInt den = denominator();
    const bool negative = num < 0;
    if (negative) num = -num;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && scaled != 0 ? "-" : "") + body;
}

ExactRational ExactRational::pow(unsigned exponent) const {
    ExactRational result(1);
    ExactRational base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.value_ == 0) throw InvalidInput("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace bollobas
