#include "ruscs/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ruscs {

namespace {

Integer gcd(Integer a, Integer b)
{
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_double(double x)
{
    if (!std::isfinite(x)) {
        throw std::invalid_argument("Rational::from_double: non-finite value");
    }
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    Integer num = Integer(static_cast<long long>(std::ldexp(m, 53)));
    exp -= 53;
    if (exp >= 0) {
        return {num << exp, 1};
    }
    return {num, Integer(1) << (-exp)};
}

Rational Rational::from_decimal(const std::string &text)
{
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    Integer num = 0;
    long frac_digits = 0;
    bool any_digit = false;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_dot) {
                ++frac_digits;
            }
            any_digit = true;
        }
        else if (c == '.' && !seen_dot) {
            seen_dot = true;
        }
        else {
            break;
        }
    }
    long expo = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        expo = std::strtol(text.c_str() + pos, nullptr, 10);
        while (pos < text.size() &&
               (text[pos] == '+' || text[pos] == '-' || (text[pos] >= '0' && text[pos] <= '9'))) {
            ++pos;
        }
    }
    if (!any_digit || pos != text.size()) {
        throw std::invalid_argument("Rational::from_decimal: malformed literal '" + text + "'");
    }
    if (neg) {
        num = -num;
    }
    long net = expo - frac_digits;
    Integer pow10 = 1;
    for (long i = 0; i < std::labs(net); ++i) {
        pow10 *= 10;
    }
    if (net >= 0) {
        return {num * pow10, 1};
    }
    return {num, pow10};
}

std::string Rational::to_fraction_string() const
{
    return num_.str() + "/" + den_.str();
}

} // namespace ruscs
