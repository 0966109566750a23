#pragma once

#include "ruscs/ring.hpp"

#include <string>

namespace ruscs {

/**
 * Rational: exact fraction over arbitrary-precision integers, normalized to
 * positive denominator and lowest terms. Used wherever the pipeline promises
 * exact comparisons (failure probabilities, success probabilities, cone
 * constants).
 */
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer num, Integer den);
    explicit Rational(long v) : num_(v), den_(1) {}

    /// Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double x);

    /// Parse a decimal literal such as "0.25" or "-1.5e-3" exactly.
    static Rational from_decimal(const std::string &text);

    const Integer &num() const { return num_; }
    const Integer &den() const { return den_; }

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }
    bool operator<(const Rational &o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational &o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational &o) const { return o < *this; }
    bool operator>=(const Rational &o) const { return o <= *this; }

    Rational operator+(const Rational &o) const
    {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    Rational operator-(const Rational &o) const
    {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    Rational operator*(const Rational &o) const { return {num_ * o.num_, den_ * o.den_}; }
    Rational operator-() const { return {-num_, den_}; }

    double to_double() const
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Reduced "num/den" rendering, e.g. "1/1" or "3/4".
    std::string to_fraction_string() const;

  private:
    Integer num_, den_;
};

} // namespace ruscs
