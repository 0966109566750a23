#include "ruscs/point_enum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ruscs {

namespace {

// Exact dyadic decomposition x = num / 2^shift of a double.
std::pair<Integer, long> dyadic(double x)
{
    if (x == 0.0) {
        return {0, 0};
    }
    int e = 0;
    double m = std::frexp(x, &e);
    auto num = Integer(static_cast<long long>(std::ldexp(m, 53)));
    long shift = 53 - e;
    while (shift > 0 && num % 2 == 0) {
        num >>= 1;
        --shift;
    }
    if (shift < 0) {
        num <<= -shift;
        shift = 0;
    }
    return {num, shift};
}

} // namespace

EnumRegion::EnumRegion(const TargetUnitary &target, const Rational &epsilon,
                       const Rational &p_fail, int n)
    : u_(target.u), n_(n), eps_(epsilon), p_(p_fail)
{
    init();
}

EnumRegion::EnumRegion(const TargetUnitary &target, double epsilon, double p_fail, int n)
    : EnumRegion(target, Rational::from_double(epsilon), Rational::from_double(p_fail), n)
{
}

void EnumRegion::init()
{
    if (n_ < 0) {
        throw std::invalid_argument("region: N must be nonnegative");
    }
    if (!(eps_ > Rational(0) && eps_ < Rational(2))) {
        throw std::invalid_argument("region: epsilon must lie in (0,2)");
    }
    if (!(p_ > Rational(0) && p_ < Rational(1))) {
        throw std::invalid_argument("region: p must lie in (0,1)");
    }
    epsilon_d_ = eps_.to_double();
    p_d_ = p_.to_double();
    c_d_ = 1.0 - (epsilon_d_ / 2) * (epsilon_d_ / 2);
    rmax_d_ = std::pow(2.0, n_ / 2.0);
    s_d_ = std::sqrt((1.0 - p_d_) * std::pow(2.0, n_));

    // Common-denominator form of the target vector: u_j = tnum_[j] / 2^te_.
    std::array<std::pair<Integer, long>, 4> parts;
    te_ = 0;
    for (int j = 0; j < 4; ++j) {
        parts[j] = dyadic(u_[j]);
        te_ = std::max(te_, parts[j].second);
    }
    for (int j = 0; j < 4; ++j) {
        tnum_[j] = parts[j].first << (te_ - parts[j].second);
    }

    two_n_ = Integer(1) << n_;
    Rational c = Rational(1) - eps_ * eps_ * Rational(1, 4);
    Rational c2 = c * c;
    c2num_ = c2.num();
    c2den_ = c2.den();
    Rational pc = Rational(1) - p_;
    pcnum_ = pc.num();
    pcden_ = pc.den();
}

Rational EnumRegion::inner_with_target(const QuatVec &q) const
{
    Integer t = tnum_[0] * q.uI + tnum_[1] * q.uX + tnum_[2] * q.uY + tnum_[3] * q.uZ;
    return {t, Integer(1) << te_};
}

bool EnumRegion::satisfies_original_prob(const QuatVec &q) const
{
    // (1-p) 2^N <= <u0,u0>
    return pcnum_ * two_n_ <= pcden_ * norm_sq(q);
}

bool EnumRegion::contains(const QuatVec &q) const
{
    Integer nn = norm_sq(q);
    if (nn == 0 || nn > two_n_) {
        return false;
    }
    Integer t = tnum_[0] * q.uI + tnum_[1] * q.uX + tnum_[2] * q.uY + tnum_[3] * q.uZ;
    if (t <= 0) {
        return false;
    }
    Integer t2 = t * t;
    Integer e2 = Integer(1) << (2 * te_);
    // Cone: t^2 >= c^2 <u0,u0> * 2^(2 te).
    if (t2 * c2den_ < c2num_ * nn * e2) {
        return false;
    }
    // Strengthened probability bound: t^2 >= (1-p) 2^N * 2^(2 te).
    if (t2 * pcden_ < pcnum_ * two_n_ * e2) {
        return false;
    }
    // The strengthened bound implies the original one mathematically; check
    // it exactly anyway so accepted points always satisfy the original bounds.
    return satisfies_original_prob(q);
}

std::array<std::pair<std::int64_t, std::int64_t>, 4> EnumRegion::bounding_box() const
{
    if (n_ > 50) {
        throw std::invalid_argument("region: N too large for box enumeration");
    }
    // Decompose u0 = alpha u + w with w orthogonal to u: alpha in [s, rmax],
    // ||w|| <= min(rmax sqrt(1-c^2)/c, sqrt(rmax^2 - s^2)).
    double wmax = rmax_d_ * std::sqrt(std::max(0.0, 1.0 - c_d_ * c_d_)) / c_d_;
    wmax = std::min(wmax, std::sqrt(std::max(0.0, rmax_d_ * rmax_d_ - s_d_ * s_d_)));
    const double slack = 1e-9 * (1.0 + rmax_d_);
    // Norm cap: integer coordinates never exceed floor(rmax).
    const auto radius = static_cast<std::int64_t>(std::floor(rmax_d_ + slack));
    std::array<std::pair<std::int64_t, std::int64_t>, 4> box;
    for (int j = 0; j < 4; ++j) {
        double amin = u_[j] >= 0 ? s_d_ * u_[j] : rmax_d_ * u_[j];
        double amax = u_[j] >= 0 ? rmax_d_ * u_[j] : s_d_ * u_[j];
        auto lo = static_cast<std::int64_t>(std::floor(amin - wmax - slack));
        auto hi = static_cast<std::int64_t>(std::ceil(amax + wmax + slack));
        box[j] = {std::max(lo, -radius), std::min(hi, radius)};
    }
    return box;
}

std::vector<QuatVec> EnumRegion::enumerate(std::int64_t budget) const
{
    if (budget < 1) {
        throw std::invalid_argument("enumerate: budget must be >= 1");
    }
    auto box = bounding_box();
    std::vector<QuatVec> found;
    for (std::int64_t a = box[0].first; a <= box[0].second; ++a) {
        for (std::int64_t b = box[1].first; b <= box[1].second; ++b) {
            for (std::int64_t c = box[2].first; c <= box[2].second; ++c) {
                for (std::int64_t d = box[3].first; d <= box[3].second; ++d) {
                    QuatVec q{a, b, c, d};
                    if (contains(q)) {
                        found.push_back(q);
                        if (static_cast<std::int64_t>(found.size()) >= budget) {
                            goto done;
                        }
                    }
                }
            }
        }
    }
done:
    std::sort(found.begin(), found.end(), [&](const QuatVec &x, const QuatVec &y) {
        Integer nx = norm_sq(x), ny = norm_sq(y);
        if (nx != ny) {
            return nx > ny;
        }
        Rational tx = inner_with_target(x), ty = inner_with_target(y);
        if (tx != ty) {
            return ty < tx;
        }
        if (x.uI != y.uI) {
            return x.uI < y.uI;
        }
        if (x.uX != y.uX) {
            return x.uX < y.uX;
        }
        if (x.uY != y.uY) {
            return x.uY < y.uY;
        }
        return x.uZ < y.uZ;
    });
    return found;
}

std::vector<QuatVec> solve_point_enumeration(const TargetUnitary &target, const Rational &epsilon,
                                     const Rational &p_fail, int n, std::int64_t budget)
{
    EnumRegion region(target, epsilon, p_fail, n);
    std::vector<QuatVec> points = region.enumerate(budget);
    const double eps_d = epsilon.to_double();
    std::vector<QuatVec> out;
    out.reserve(points.size());
    for (const auto &q : points) {
        if (norm_sq(q) > (Integer(1) << n) || !region.satisfies_original_prob(q)) {
            continue;
        }
        double t = region.inner_with_target(q).to_double();
        double nn = static_cast<double>(norm_sq(q));
        double err = std::sqrt(std::max(0.0, 4.0 - 4.0 * t / std::sqrt(nn)));
        if (err <= eps_d + 1e-12) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<QuatVec> solve_point_enumeration(const TargetUnitary &target, double epsilon, double p_fail,
                                     int n, std::int64_t budget)
{
    return solve_point_enumeration(target, Rational::from_double(epsilon), Rational::from_double(p_fail),
                           n, budget);
}

} // namespace ruscs
