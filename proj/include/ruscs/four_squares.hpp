#pragma once

#include "ruscs/ring.hpp"

#include <array>
#include <random>
#include <vector>

namespace ruscs {

using Rng = std::mt19937_64;

/// A solution of a*a + b*b + c*c + d*d = M, components nonnegative descending.
struct FourSquares {
    Integer a, b, c, d;

    bool operator==(const FourSquares &o) const
    {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    Integer sum_of_squares() const { return a * a + b * b + c * c + d * d; }
};

/// 40-round strong-pseudoprime test (random bases from rng).
bool is_probable_prime(const Integer &n, Rng &rng);

/// x with x^2 = -1 (mod pr) for a prime pr = 1 (mod 4). Throws if pr is
/// detected composite or of the wrong residue class.
Integer sqrt_minus_one(const Integer &pr, Rng &rng);

/// (x, y) with x^2 + y^2 = pr for pr = 2 or pr prime = 1 (mod 4), via the
/// Gaussian gcd of pr and sqrt(-1) + i. Returned with x >= y >= 0.
std::pair<Integer, Integer> two_squares(const Integer &pr, Rng &rng);

/// One four-squares decomposition of M >= 0 (always exists).
FourSquares four_squares(const Integer &M, Rng &rng);

/// Up to `count` decompositions, distinct as unordered multisets of absolute
/// values, deterministic under a fixed rng seed.
std::vector<FourSquares> four_squares_multi(const Integer &M, int count, Rng &rng);

/// Integer floor square root.
Integer isqrt(const Integer &n);

} // namespace ruscs
