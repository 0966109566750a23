#include "ruscs/plan.hpp"

#include <cmath>
#include <stdexcept>

namespace ruscs {

bool is_isometry(const RMat4x2 &w)
{
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            RingElem acc;
            for (int r = 0; r < 4; ++r) {
                acc = acc + w[r][i].conj() * w[r][j];
            }
            if (acc != RingElem(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

RUSPlan build_plan(int n, const QuatVec &u0, const QuatVec &u1)
{
    if (n < 0) {
        throw std::invalid_argument("build_plan: N must be nonnegative");
    }
    if (u0.is_zero()) {
        throw std::invalid_argument("build_plan: u0 must be nonzero");
    }
    Integer n0 = norm_sq(u0);
    Integer n1 = norm_sq(u1);
    if (n0 + n1 != (Integer(1) << n)) {
        throw std::invalid_argument("build_plan: <u0,u0> + <u1,u1> must equal 2^N (got " +
                                    n0.str() + " + " + n1.str() + ")");
    }

    RUSPlan plan;
    plan.n = n;
    plan.u0 = u0;
    plan.u1 = u1;
    GMat2 top = to_matrix(u0);
    GMat2 bottom = to_matrix(u1);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            plan.w_prime[r][c] = reduce(top[r][c], n);
            plan.w_prime[r + 2][c] = reduce(bottom[r][c], n);
        }
    }
    if (!is_isometry(plan.w_prime)) {
        throw std::logic_error("build_plan: W' failed exact orthonormality (internal error)");
    }
    plan.success_prob = Rational(n0, Integer(1) << n);
    plan.r1_vec = u1;
    plan.r1_norm_sq = n1;
    return plan;
}

RUSPlan build_plan(int n, const QuatVec &u0, const QuatVec &u1, const TargetUnitary &target)
{
    RUSPlan plan = build_plan(n, u0, u1);
    plan.error_bound = approx_error(u0, target);
    return plan;
}

double approx_error(const QuatVec &u0, const TargetUnitary &target)
{
    if (u0.is_zero()) {
        throw std::invalid_argument("approx_error: u0 must be nonzero");
    }
    Vec4 v{static_cast<double>(u0.uI), static_cast<double>(u0.uX), static_cast<double>(u0.uY),
           static_cast<double>(u0.uZ)};
    double ip = inner(v, target.u);
    double norm = std::sqrt(inner(v, v));
    return std::sqrt(std::max(0.0, 4.0 - 4.0 * ip / norm));
}

std::pair<QuatVec, Integer> recovery_unitary(const RUSPlan &plan)
{
    return {plan.r1_vec, plan.r1_norm_sq};
}

} // namespace ruscs
