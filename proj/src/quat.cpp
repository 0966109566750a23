#include "ruscs/quat.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ruscs {

std::string QuatVec::to_string() const
{
    std::ostringstream os;
    os << "(" << uI << ", " << uX << ", " << uY << ", " << uZ << ")";
    return os.str();
}

Integer inner(const QuatVec &a, const QuatVec &b)
{
    return a.uI * b.uI + a.uX * b.uX + a.uY * b.uY + a.uZ * b.uZ;
}

double inner(const Vec4 &a, const Vec4 &b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

GMat2 to_matrix(const QuatVec &u)
{
    return {{{GaussianInt{u.uI, u.uZ}, GaussianInt{u.uY, u.uX}},
             {GaussianInt{-u.uY, u.uX}, GaussianInt{u.uI, -u.uZ}}}};
}

QuatVec quat_mul(const QuatVec &a, const QuatVec &b)
{
    return {a.uI * b.uI - a.uX * b.uX - a.uY * b.uY - a.uZ * b.uZ,
            a.uI * b.uX + a.uX * b.uI + a.uZ * b.uY - a.uY * b.uZ,
            a.uI * b.uY + a.uY * b.uI + a.uX * b.uZ - a.uZ * b.uX,
            a.uI * b.uZ + a.uZ * b.uI + a.uY * b.uX - a.uX * b.uY};
}

QuatVec quat_conj(const QuatVec &u) { return {u.uI, -u.uX, -u.uY, -u.uZ}; }

Vec4 quat_mul(const Vec4 &a, const QuatVec &b)
{
    Vec4 bd{static_cast<double>(b.uI), static_cast<double>(b.uX), static_cast<double>(b.uY),
            static_cast<double>(b.uZ)};
    return {a[0] * bd[0] - a[1] * bd[1] - a[2] * bd[2] - a[3] * bd[3],
            a[0] * bd[1] + a[1] * bd[0] + a[3] * bd[2] - a[2] * bd[3],
            a[0] * bd[2] + a[2] * bd[0] + a[1] * bd[3] - a[3] * bd[1],
            a[0] * bd[3] + a[3] * bd[0] + a[2] * bd[1] - a[1] * bd[2]};
}

std::array<std::array<std::complex<double>, 2>, 2> to_complex_matrix(const Vec4 &u)
{
    return {{{std::complex<double>{u[0], u[3]}, std::complex<double>{u[2], u[1]}},
             {std::complex<double>{-u[2], u[1]}, std::complex<double>{u[0], -u[3]}}}};
}

std::string TargetUnitary::to_string() const
{
    std::ostringstream os;
    os << "(" << u[0] << ", " << u[1] << ", " << u[2] << ", " << u[3] << ")";
    return os.str();
}

TargetUnitary target_from_coeffs(const Vec4 &coeffs)
{
    double n = std::sqrt(inner(coeffs, coeffs));
    if (n < 1e-12) {
        throw std::invalid_argument("target: coefficient vector must be nonzero");
    }
    TargetUnitary t;
    for (int i = 0; i < 4; ++i) {
        t.u[i] = coeffs[i] / n;
    }
    return t;
}

TargetUnitary target_from_axis_angle(const std::array<double, 3> &axis, double theta)
{
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(n - 1.0) > 1e-8) {
        throw std::invalid_argument("target: rotation axis must be a unit vector");
    }
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return target_from_coeffs({c, s * axis[0], s * axis[1], s * axis[2]});
}

TargetUnitary target_from_matrix(const std::array<std::complex<double>, 4> &m)
{
    std::complex<double> det = m[0] * m[3] - m[1] * m[2];
    if (std::abs(det - std::complex<double>{1.0, 0.0}) > 1e-8) {
        throw std::invalid_argument("target: matrix determinant must equal 1 (within 1e-8)");
    }
    Vec4 coeffs{m[0].real(), m[1].imag(), m[1].real(), m[0].imag()};
    TargetUnitary t = target_from_coeffs(coeffs);
    // The extraction is only faithful for matrices of the form
    // uI*I + uX*iX + uY*iY + uZ*iZ; verify by re-rendering.
    auto r = to_complex_matrix(t.u);
    std::array<std::complex<double>, 4> flat{r[0][0], r[0][1], r[1][0], r[1][1]};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(flat[i] - m[i]) > 1e-6) {
            throw std::invalid_argument(
                "target: matrix is not a real combination of I, iX, iY, iZ (not special unitary)");
        }
    }
    return t;
}

namespace {

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
    return out;
}

double parse_double(const std::string &s)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    }
    catch (const std::exception &) {
        throw std::invalid_argument("target: malformed number '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("target: malformed number '" + s + "'");
    }
    return v;
}

} // namespace

TargetUnitary parse_target(const std::string &spec)
{
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument(
            "target: expected 'coeffs:...', 'axis:...' or 'matrix:...', got '" + spec + "'");
    }
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);

    if (kind == "coeffs") {
        auto parts = split(rest, ',');
        if (parts.size() != 4) {
            throw std::invalid_argument("target: coeffs form needs exactly 4 numbers");
        }
        Vec4 c;
        for (int i = 0; i < 4; ++i) {
            c[i] = parse_double(parts[i]);
        }
        return target_from_coeffs(c);
    }
    if (kind == "axis") {
        auto parts = split(rest, ':');
        if (parts.size() != 2) {
            throw std::invalid_argument("target: axis form is axis:<axis>:<theta>");
        }
        double theta = parse_double(parts[1]);
        std::array<double, 3> axis{};
        if (parts[0] == "x") {
            axis = {1, 0, 0};
        }
        else if (parts[0] == "y") {
            axis = {0, 1, 0};
        }
        else if (parts[0] == "z") {
            axis = {0, 0, 1};
        }
        else {
            auto comps = split(parts[0], ',');
            if (comps.size() != 3) {
                throw std::invalid_argument("target: axis must be x, y, z or nx,ny,nz");
            }
            for (int i = 0; i < 3; ++i) {
                axis[i] = parse_double(comps[i]);
            }
        }
        return target_from_axis_angle(axis, theta);
    }
    if (kind == "matrix") {
        auto parts = split(rest, ',');
        if (parts.size() != 8) {
            throw std::invalid_argument(
                "target: matrix form needs 8 numbers re00,im00,...,re11,im11");
        }
        std::array<std::complex<double>, 4> m;
        for (int i = 0; i < 4; ++i) {
            m[i] = {parse_double(parts[2 * i]), parse_double(parts[2 * i + 1])};
        }
        return target_from_matrix(m);
    }
    throw std::invalid_argument("target: unknown form '" + kind + "'");
}

} // namespace ruscs
