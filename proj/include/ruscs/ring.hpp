#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <ostream>
#include <string>

namespace ruscs {

using Integer = boost::multiprecision::cpp_int;

/**
 * GaussianInt: an element re + im*i of Z[i] with arbitrary-precision
 * components.
 */
class GaussianInt {
  public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(Integer re, Integer im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussianInt(long v) : re_(v), im_(0) {}

    const Integer &re() const { return re_; }
    const Integer &im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    bool operator==(const GaussianInt &o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianInt &o) const { return !(*this == o); }

    GaussianInt operator+(const GaussianInt &o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianInt operator-(const GaussianInt &o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianInt operator-() const { return {-re_, -im_}; }

    GaussianInt operator*(const GaussianInt &o) const
    {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }

    GaussianInt conj() const { return {re_, -im_}; }

    /// Field norm re^2 + im^2, a nonnegative plain integer.
    Integer norm() const { return re_ * re_ + im_ * im_; }

    /// Multiply by i^j for j in [0,3].
    GaussianInt times_i_pow(int j) const;

    /// z / (1+i) when (1+i) divides z, i.e. when re+im is even.
    std::optional<GaussianInt> div_lambda() const;

    /// Largest e such that (1+i)^e divides z; unbounded for z = 0 (returns `cap`).
    int lambda_valuation(int cap) const;

    std::complex<double> to_complex() const
    {
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }

    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const GaussianInt &z);

  private:
    Integer re_, im_;
};

/**
 * RingElem: an element of Z[i, 1/(1+i)] stored as num / (1+i)^k in canonical
 * form (k = 0, or num not divisible by 1+i). Zero is stored as (0, k=0).
 */
class RingElem {
  public:
    RingElem() : num_(), k_(0) {}
    RingElem(GaussianInt num, int k);
    explicit RingElem(long v) : num_(v), k_(0) {}

    const GaussianInt &num() const { return num_; }
    int k() const { return k_; }

    /// Smallest denominator exponent: least e with (1+i)^e * x in Z[i].
    int sde() const { return k_; }

    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RingElem &o) const { return num_ == o.num_ && k_ == o.k_; }
    bool operator!=(const RingElem &o) const { return !(*this == o); }

    RingElem operator+(const RingElem &o) const;
    RingElem operator-(const RingElem &o) const;
    RingElem operator-() const { return make_canonical(-num_, k_); }
    RingElem operator*(const RingElem &o) const;

    RingElem conj() const;
    RingElem times_i_pow(int j) const { return make_canonical(num_.times_i_pow(j), k_); }

    /// Floating evaluation for diagnostics only, never for decisions.
    std::complex<double> to_complex() const;

    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const RingElem &x);

  private:
    static RingElem make_canonical(GaussianInt num, int k);
    friend RingElem reduce(GaussianInt num, int k);

    GaussianInt num_;
    int k_;
};

/// Canonical reduction of num / (1+i)^k (strips the denominator while divisible).
RingElem reduce(GaussianInt num, int k);

/// (1+i)^k as a Gaussian integer, k >= 0.
GaussianInt lambda_pow(int k);

} // namespace ruscs
