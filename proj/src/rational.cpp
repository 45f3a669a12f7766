#include "usctec/rational.hpp"

#include "usctec/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <ostream>

namespace usctec {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw InputError("empty integer in rational literal '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw InputError("malformed rational literal '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InputError("malformed rational literal '" + std::string(whole) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string render_decimal(const Rational& r, int places, bool round_half_up) {
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(places));
    BigInt num = abs(r).numerator() * scale;
    BigInt den = r.denominator();
    BigInt q = num / den;
    BigInt rem = num % den;
    if (round_half_up && rem * 2 >= den) q += 1;
    std::string digits = q.str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out;
    if (r.sign() < 0 && q != 0) out += '-';
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-BigInt(num), -BigInt(den))
                     : boost::multiprecision::cpp_rational(BigInt(num), BigInt(den));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den))
                     : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t.empty()) throw InputError("empty rational literal");

    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(t.substr(0, slash), text);
        BigInt den = parse_integer(t.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = t.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = t.substr(0, dot);
        std::string_view frac_part = t.substr(dot + 1);
        bool negative = !int_part.empty() && int_part[0] == '-';
        if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) int_part.remove_prefix(1);
        if (int_part.empty() && frac_part.empty())
            throw InputError("malformed rational literal '" + std::string(text) + "'");
        BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
        BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
        if (whole < 0 || frac < 0) throw InputError("malformed rational literal '" + std::string(text) + "'");
        BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
        BigInt num = whole * scale + frac;
        return Rational(negative ? BigInt(-num) : num, scale);
    }
    return Rational(parse_integer(t, text), BigInt(1));
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_decimal(int places) const { return render_decimal(*this, places, true); }

std::string Rational::to_decimal_truncated(int places) const { return render_decimal(*this, places, false); }

BigInt Rational::floor() const {
    BigInt n = numerator();
    BigInt d = denominator();
    BigInt q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational sum(std::span<const Rational> values) {
    Rational total;
    for (const auto& v : values) total += v;
    return total;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

BigInt gcd(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }
BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return mp::lcm(a, b);
}

BigInt common_denominator(std::span<const Rational> values) {
    BigInt out = 1;
    for (const auto& v : values) out = lcm(out, v.denominator());
    return out;
}

std::vector<std::string> to_strings(std::span<const Rational> values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

RationalVec parse_all(std::span<const std::string> texts) {
    RationalVec out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(Rational::parse(t));
    return out;
}

}  // namespace usctec
