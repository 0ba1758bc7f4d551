#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bollobas {

using BigInt = boost::multiprecision::cpp_int;

[[nodiscard]] std::string to_string(const BigInt& value);

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws InvalidInput when den is zero.
    ExactRational(const BigInt& num, const BigInt& den);

    /// Accepts "a", "a/b" and "-a/b". Throws InvalidInput on anything else.
    static ExactRational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const;
    [[nodiscard]] BigInt denominator() const;
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }
    [[nodiscard]] int sign() const;

    /// "num/den", always with the denominator ("2/1").
    [[nodiscard]] std::string to_string() const;
    /// Decimal rendering rounded half away from zero to `digits` places.
    [[nodiscard]] std::string to_decimal(int digits) const;

    [[nodiscard]] ExactRational pow(unsigned exponent) const;

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) {
        ExactRational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    boost::multiprecision::cpp_rational value_;
};

}  // namespace bollobas
