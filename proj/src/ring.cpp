#include "ruscs/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace ruscs {

GaussianInt GaussianInt::times_i_pow(int j) const
{
    switch (((j % 4) + 4) % 4) {
    case 0:
        return *this;
    case 1:
        return {-im_, re_};
    case 2:
        return {-re_, -im_};
    default:
        return {im_, -re_};
    }
}

std::optional<GaussianInt> GaussianInt::div_lambda() const
{
    // z/(1+i) = ((re+im) + (im-re)i) / 2, integral iff re+im is even.
    if ((re_ + im_) % 2 != 0) {
        return std::nullopt;
    }
    return GaussianInt{(re_ + im_) / 2, (im_ - re_) / 2};
}

int GaussianInt::lambda_valuation(int cap) const
{
    if (is_zero()) {
        return cap;
    }
    GaussianInt z = *this;
    int v = 0;
    while (v < cap) {
        auto q = z.div_lambda();
        if (!q) {
            break;
        }
        z = *q;
        ++v;
    }
    return v;
}

std::string GaussianInt::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const GaussianInt &z)
{
    if (z.is_zero()) {
        return os << "0";
    }
    if (z.re_ != 0) {
        os << z.re_;
        if (z.im_ > 0) {
            os << "+";
        }
    }
    if (z.im_ != 0) {
        if (z.im_ == -1) {
            os << "-";
        }
        else if (z.im_ != 1) {
            os << z.im_;
        }
        os << "i";
    }
    return os;
}

RingElem::RingElem(GaussianInt num, int k) : num_(std::move(num)), k_(k)
{
    if (k < 0) {
        throw std::invalid_argument("RingElem: denominator exponent must be nonnegative");
    }
    *this = reduce(num_, k_);
}

RingElem RingElem::make_canonical(GaussianInt num, int k)
{
    // Unit multiples and negation preserve canonical form; skip re-reduction.
    RingElem r;
    r.num_ = std::move(num);
    r.k_ = r.num_.is_zero() ? 0 : k;
    return r;
}

RingElem reduce(GaussianInt num, int k)
{
    if (num.is_zero()) {
        return RingElem{};
    }
    while (k > 0) {
        auto q = num.div_lambda();
        if (!q) {
            break;
        }
        num = *q;
        --k;
    }
    return RingElem::make_canonical(std::move(num), k);
}

RingElem RingElem::operator+(const RingElem &o) const
{
    int k = std::max(k_, o.k_);
    GaussianInt n = num_ * lambda_pow(k - k_) + o.num_ * lambda_pow(k - o.k_);
    return reduce(std::move(n), k);
}

RingElem RingElem::operator-(const RingElem &o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem &o) const
{
    return reduce(num_ * o.num_, k_ + o.k_);
}

RingElem RingElem::conj() const
{
    // conj(1/(1+i)) = 1/(1-i) = i/(1+i), so conjugation contributes i^k.
    return reduce(num_.conj().times_i_pow(k_), k_);
}

std::complex<double> RingElem::to_complex() const
{
    const std::complex<double> lambda{1.0, 1.0};
    std::complex<double> v = num_.to_complex();
    for (int i = 0; i < k_; ++i) {
        v /= lambda;
    }
    return v;
}

std::string RingElem::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const RingElem &x)
{
    if (x.k_ == 0) {
        return os << x.num_;
    }
    return os << "(" << x.num_ << ")/(1+i)^" << x.k_;
}

GaussianInt lambda_pow(int k)
{
    if (k < 0) {
        throw std::invalid_argument("lambda_pow: negative exponent");
    }
    // (1+i)^2 = 2i, so even powers are cheap.
    Integer two_pow = Integer(1) << (k / 2);
    GaussianInt even{two_pow, 0};
    even = even.times_i_pow((k / 2) % 4);
    if (k % 2 == 0) {
        return even;
    }
    return even * GaussianInt{1, 1};
}

} // namespace ruscs
