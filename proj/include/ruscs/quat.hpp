#pragma once

#include "ruscs/ring.hpp"

#include <array>
#include <complex>
#include <string>

namespace ruscs {

/// 2x2 matrix over Z[i], row-major.
using GMat2 = std::array<std::array<GaussianInt, 2>, 2>;

/// Real 4-vector of coefficients for (I, iX, iY, iZ).
using Vec4 = std::array<double, 4>;

/**
 * QuatVec: integer 4-vector (uI, uX, uY, uZ) identified with the matrix
 * U = uI*I + uX*iX + uY*iY + uZ*iZ. Multiplication of matrices corresponds
 * to quaternion multiplication of vectors.
 */
struct QuatVec {
    Integer uI{0}, uX{0}, uY{0}, uZ{0};

    bool operator==(const QuatVec &o) const
    {
        return uI == o.uI && uX == o.uX && uY == o.uY && uZ == o.uZ;
    }
    bool operator!=(const QuatVec &o) const { return !(*this == o); }

    bool is_zero() const { return uI == 0 && uX == 0 && uY == 0 && uZ == 0; }

    std::string to_string() const;
};

/// Euclidean inner product of integer 4-vectors.
Integer inner(const QuatVec &a, const QuatVec &b);

/// Euclidean inner product of real 4-vectors.
double inner(const Vec4 &a, const Vec4 &b);

inline Integer norm_sq(const QuatVec &u) { return inner(u, u); }

/// [[uI + i uZ, uY + i uX], [-uY + i uX, uI - i uZ]]; satisfies
/// U U^dag = <u,u> I and det U = <u,u> exactly.
GMat2 to_matrix(const QuatVec &u);

/// Quaternion product matching to_matrix(a) * to_matrix(b).
QuatVec quat_mul(const QuatVec &a, const QuatVec &b);

/// Quaternion conjugate (a, -b, -c, -d); matches the matrix adjoint.
QuatVec quat_conj(const QuatVec &u);

/// Same product formula over real coefficients (first factor real).
Vec4 quat_mul(const Vec4 &a, const QuatVec &b);

/// Complex rendering of the 2x2 matrix of a real 4-vector.
std::array<std::array<std::complex<double>, 2>, 2> to_complex_matrix(const Vec4 &u);

/**
 * TargetUnitary: a one-qubit special unitary as a unit 4-vector of
 * (I, iX, iY, iZ) coefficients.
 */
struct TargetUnitary {
    Vec4 u{1.0, 0.0, 0.0, 0.0};

    std::string to_string() const;
};

/**
 * Build a target from one of the accepted descriptions:
 *   coeffs:a,b,c,d                    four real coefficients (normalized)
 *   axis:x|y|z:theta                  rotation about a named axis
 *   axis:nx,ny,nz:theta               rotation about a unit axis
 *   matrix:re00,im00,re01,im01,re10,im10,re11,im11
 * Throws std::invalid_argument naming the failing constraint.
 */
TargetUnitary parse_target(const std::string &spec);

/// Target from raw coefficients; rejects the zero vector, then normalizes.
TargetUnitary target_from_coeffs(const Vec4 &coeffs);

/// Target from a complex 2x2 special unitary; |det - 1| <= 1e-8 required.
TargetUnitary target_from_matrix(const std::array<std::complex<double>, 4> &entries);

/// Target from axis-angle: cos(theta/2) I + sin(theta/2) i(n . (X,Y,Z)).
TargetUnitary target_from_axis_angle(const std::array<double, 3> &axis, double theta);

} // namespace ruscs
