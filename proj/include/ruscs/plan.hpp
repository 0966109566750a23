#pragma once

#include "ruscs/quat.hpp"
#include "ruscs/rational.hpp"
#include "ruscs/ring.hpp"

#include <array>

namespace ruscs {

/// 4x2 matrix over Z[i, 1/(1+i)], row-major.
using RMat4x2 = std::array<std::array<RingElem, 2>, 4>;

/**
 * RUSPlan: the exact data of one repeat-until-success round. W' stacks
 * to_matrix(u0) and to_matrix(u1), both divided by (1+i)^N; its columns are
 * the first two columns of the 4x4 unitary to synthesize. Success projects
 * onto the top block (measured ancilla = qubit 0), so the success probability
 * is <u0,u0>/2^N and the failure branch applies R1 = U1/||u1||.
 */
struct RUSPlan {
    int n = 0;
    QuatVec u0, u1;
    RMat4x2 w_prime;
    Rational success_prob;
    double error_bound = 0.0;
    QuatVec r1_vec;
    Integer r1_norm_sq;

    /// True when u1 = 0: the failure branch has probability zero.
    bool recovery_unreachable() const { return r1_norm_sq == 0; }
};

/**
 * Assemble the plan from (N, u0, u1). Requires <u0,u0> + <u1,u1> = 2^N and
 * u0 != 0 (throws std::invalid_argument otherwise). The constructed W'
 * satisfies W'^dag W' = I exactly; this identity is asserted on every build.
 */
RUSPlan build_plan(int n, const QuatVec &u0, const QuatVec &u1);

/// Same, with the approximation error filled in for the given target.
RUSPlan build_plan(int n, const QuatVec &u0, const QuatVec &u1, const TargetUnitary &target);

/// ||U - U0/||u0||||_2 = sqrt(max(0, 4 - 4 <u0,u>/||u0||)); requires u0 != 0.
double approx_error(const QuatVec &u0, const TargetUnitary &target);

/// The recovery unitary R1 as (u1, <u1,u1>); exact by construction.
std::pair<QuatVec, Integer> recovery_unitary(const RUSPlan &plan);

/// Exact check of column orthonormality W'^dag W' = I.
bool is_isometry(const RMat4x2 &w);

} // namespace ruscs
