#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace usctec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in canonical form (reduced, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent, like an int
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p/q", "p" and finite decimals such as "0.6" or "-1.25".
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    /// Canonical "p/q"; the denominator is always written, so "3/1" for 3.
    std::string str() const;
    double to_double() const;
    /// Round-half-up decimal rendering with `places` fractional digits.
    std::string to_decimal(int places) const;
    /// Decimal rendering truncated toward zero.
    std::string to_decimal_truncated(int places) const;

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }
    BigInt floor() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    const boost::multiprecision::cpp_rational& raw() const { return value_; }

private:
    boost::multiprecision::cpp_rational value_;
};

using RationalVec = std::vector<Rational>;

Rational sum(std::span<const Rational> values);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& a);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Least common multiple of all denominators in `values` (1 for empty input).
BigInt common_denominator(std::span<const Rational> values);

std::vector<std::string> to_strings(std::span<const Rational> values);
RationalVec parse_all(std::span<const std::string> texts);

}  // namespace usctec
