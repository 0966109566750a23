#pragma once

#include "ruscs/quat.hpp"
#include "ruscs/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ruscs {

/**
 * EnumRegion: the convex region R_{u,eps,p,N} cut out by the hyperbolic-cone
 * accuracy constraint <u,u0>^2 >= c^2 <u0,u0> (with <u,u0> > 0), the
 * strengthened probability constraint |<u0,u>| >= sqrt((1-p) 2^N), and the
 * norm cap <u0,u0> <= 2^N.
 *
 * Membership is decided with exact rational arithmetic relative to the stored
 * double-precision target vector (doubles are dyadic rationals), so points on
 * constraint boundaries are classified deterministically.
 */
class EnumRegion {
  public:
    EnumRegion(const TargetUnitary &target, const Rational &epsilon, const Rational &p_fail,
               int n);

    /// Convenience constructor taking exact dyadic doubles for eps and p.
    EnumRegion(const TargetUnitary &target, double epsilon, double p_fail, int n);

    const Vec4 &u() const { return u_; }
    int n() const { return n_; }
    double epsilon() const { return epsilon_d_; }
    double p_fail() const { return p_d_; }
    /// c = 1 - (eps/2)^2.
    double c() const { return c_d_; }
    /// s = sqrt((1-p) 2^N).
    double s() const { return s_d_; }
    /// rmax = 2^(N/2).
    double rmax() const { return rmax_d_; }

    bool contains(const QuatVec &point) const;

    /// <u, point> as an exact rational (relative to the stored doubles).
    Rational inner_with_target(const QuatVec &point) const;

    /// Exact check of the original probability bound (1-p) 2^N <= <u0,u0>.
    bool satisfies_original_prob(const QuatVec &point) const;

    /// Conservative outer box: every integer point of the region lies inside.
    std::array<std::pair<std::int64_t, std::int64_t>, 4> bounding_box() const;

    /// Integer points of the bounding box in nested-interval order, filtered
    /// by contains(), stopping once `budget` points are collected; the result
    /// is sorted by <u0,u0> descending, then larger <u0,u>, then
    /// lexicographically.
    std::vector<QuatVec> enumerate(std::int64_t budget) const;

  private:
    void init();

    Vec4 u_;
    int n_;
    Rational eps_;
    Rational p_;
    double epsilon_d_, p_d_, c_d_, s_d_, rmax_d_;

    // Exact precomputations: u_j = tnum_[j] / 2^te_, two_n_ = 2^N,
    // c^2 = c2num_/c2den_, (1-p) = pcnum_/pcden_.
    std::array<Integer, 4> tnum_;
    long te_ = 0;
    Integer two_n_;
    Integer c2num_, c2den_;
    Integer pcnum_, pcden_;
};

/**
 * Solve the point-enumeration problem: integer 4-vectors u0 with
 * (1-p) 2^N <= <u0,u0> <= 2^N and ||U0/||u0|| - U||_2 <= eps, found through
 * the convex region above and re-verified against the original constraints.
 */
std::vector<QuatVec> solve_point_enumeration(const TargetUnitary &target, const Rational &epsilon,
                                     const Rational &p_fail, int n, std::int64_t budget);

std::vector<QuatVec> solve_point_enumeration(const TargetUnitary &target, double epsilon, double p_fail,
                                     int n, std::int64_t budget);

} // namespace ruscs
