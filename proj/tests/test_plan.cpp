#include "ruscs/plan.hpp"

#include "ruscs/four_squares.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ruscs;

TEST_CASE("plan for the identity point")
{
    RUSPlan plan = build_plan(2, QuatVec{2, 0, 0, 0}, QuatVec{});
    // 2/(1+i)^2 = -i: the top block is -i I, the bottom block zero.
    CHECK(plan.w_prime[0][0] == RingElem(GaussianInt{0, -1}, 0));
    CHECK(plan.w_prime[0][1].is_zero());
    CHECK(plan.w_prime[1][1] == RingElem(GaussianInt{0, -1}, 0));
    CHECK(plan.w_prime[2][0].is_zero());
    CHECK(plan.w_prime[3][1].is_zero());
    CHECK(plan.success_prob == Rational(1));
    CHECK(plan.recovery_unreachable());
}

TEST_CASE("plan with a live failure branch")
{
    RUSPlan plan = build_plan(1, QuatVec{1, 0, 0, 0}, QuatVec{0, 1, 0, 0});
    CHECK(is_isometry(plan.w_prime));
    CHECK(plan.success_prob == Rational(1, 2));
    CHECK(!plan.recovery_unreachable());
    auto [r1, nn] = recovery_unitary(plan);
    CHECK(r1 == QuatVec{0, 1, 0, 0});
    CHECK(nn == 1);

    RUSPlan trivial = build_plan(0, QuatVec{1, 0, 0, 0}, QuatVec{});
    CHECK(trivial.w_prime[0][0] == RingElem(1));
    CHECK(trivial.success_prob == Rational(1));
}

TEST_CASE("norm mismatch is a hard error")
{
    CHECK_THROWS_AS(build_plan(2, QuatVec{1, 0, 0, 0}, QuatVec{}), std::invalid_argument);
    CHECK_THROWS_AS(build_plan(1, QuatVec{}, QuatVec{1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("approximation error")
{
    TargetUnitary ident = target_from_coeffs({1, 0, 0, 0});
    CHECK(approx_error(QuatVec{2, 0, 0, 0}, ident) == 0.0);
    CHECK(approx_error(QuatVec{1, 1, 0, 0}, ident) ==
          doctest::Approx(std::sqrt(4.0 - 4.0 / std::sqrt(2.0))));
    // Antipodal: distance 2 sqrt(2).
    CHECK(approx_error(QuatVec{-3, 0, 0, 0}, ident) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK_THROWS_AS(approx_error(QuatVec{}, ident), std::invalid_argument);
}

TEST_CASE("random plans: exact orthonormality and probability identity")
{
    std::mt19937_64 seed_rng(43);
    Rng rng(44);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(seed_rng() % 10);
        // Random u0 with <u0,u0> <= 2^N, u1 from the norm equation.
        long bound = static_cast<long>(std::sqrt(std::pow(2.0, n) / 4.0));
        QuatVec u0{static_cast<long>(seed_rng() % (bound + 1)),
                   static_cast<long>(seed_rng() % (bound + 1)),
                   static_cast<long>(seed_rng() % (bound + 1)),
                   static_cast<long>(seed_rng() % (bound + 1))};
        if (u0.is_zero()) {
            u0.uI = 1;
        }
        Integer deficit = (Integer(1) << n) - norm_sq(u0);
        REQUIRE(deficit >= 0);
        FourSquares s = four_squares(deficit, rng);
        QuatVec u1{s.a, s.b, s.c, s.d};
        RUSPlan plan = build_plan(n, u0, u1);
        CHECK(is_isometry(plan.w_prime));
        CHECK(norm_sq(u0) + norm_sq(u1) == Integer(1) << n);
        // success_prob + failure_prob = 1 exactly.
        Rational fail(norm_sq(u1), Integer(1) << n);
        CHECK(plan.success_prob + fail == Rational(1));
    }
}
