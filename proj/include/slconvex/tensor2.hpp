#pragma once

// 2x2 linear algebra kernel: determinant expansion, closed-form singular
// values, tangent-space tests on the det = 1 level set, rank-one directions
// and the shear-rotation factorization. Everything here is a pure function
// on value types.

#include <cmath>
#include <string>

#include "slconvex/errors.hpp"

namespace slconvex {

inline constexpr double kDefaultEpsDet = 1e-10;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
    bool is_zero() const { return x == 0.0 && y == 0.0; }

    Vec2 normalized() const;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Mat2 {
    // Row-major entries of a real 2x2 matrix.
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
    // Simple shear [[1, gamma], [0, 1]].
    static Mat2 shear(double gamma) { return {1.0, gamma, 0.0, 1.0}; }
    static Mat2 rotation(double angle)
    {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c, -s, s, c};
    }
    // Two-dimensional alternator [[0, 1], [-1, 0]].
    static Mat2 alternator() { return {0.0, 1.0, -1.0, 0.0}; }
    static Mat2 outer(Vec2 xi, Vec2 eta)
    {
        return {xi.x * eta.x, xi.x * eta.y, xi.y * eta.x, xi.y * eta.y};
    }

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
    double frobenius_sq() const { return a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22; }
    double frobenius() const { return std::sqrt(frobenius_sq()); }
    double max_abs() const;
    bool finite() const
    {
        return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
    }

    Mat2 transpose() const { return {a11, a21, a12, a22}; }
    // Cofactor matrix, equals det(F) * F^{-T}; total (no division).
    Mat2 cofactor() const { return {a22, -a21, -a12, a11}; }
    Mat2 inverse() const;
    Mat2 inverse_transpose() const;

    Vec2 operator*(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b)
{
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b)
{
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
inline Mat2 operator*(double s, const Mat2& m)
{
    return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}
inline Mat2 operator*(const Mat2& a, const Mat2& b)
{
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

// Frobenius scalar product <A, B> = tr(B^T A).
inline double inner(const Mat2& a, const Mat2& b)
{
    return a.a11 * b.a11 + a.a12 * b.a12 + a.a21 * b.a21 + a.a22 * b.a22;
}

std::string to_string(const Mat2& m);

// Ordered singular values of an invertible 2x2 matrix together with the
// derived invariants I = lmax^2 + lmin^2 (= squared Frobenius norm) and
// gamma = lmax - lmin (the amount of shear when det F = 1).
struct SingularPair {
    double lmax = 1.0;
    double lmin = 1.0;
    double I = 2.0;
    double gamma = 0.0;

    double ratio() const { return lmax / lmin; }
};

// A rank-one perturbation direction xi (x) eta; both legs nonzero.
struct RankOneDirection {
    Vec2 xi;
    Vec2 eta;

    RankOneDirection(Vec2 xi_, Vec2 eta_);
    Mat2 matrix() const { return Mat2::outer(xi, eta); }
};

// det(F + H) via the rank-one determinant expansion
//   det(F + H) = det F + det F <F^{-T}, H> + det H.
// For det F = 0 the identity degenerates and det(F + H) is evaluated
// directly (the expansion extends by continuity).
double det_expand(const Mat2& f, const Mat2& h);

// Closed-form singular values: with s = ||F||^2 and d = |det F|,
//   lmax = (sqrt(s + 2d) + sqrt(s - 2d)) / 2,   lmin = d / lmax.
// Rejects singular input.
SingularPair singular_values(const Mat2& f);

// <F^{-T}, xi (x) eta> = <xi, F^{-T} eta>. Zero certifies that the segment
// F + t xi (x) eta keeps det constant for all real t.
double tangent_test(const Mat2& f, const RankOneDirection& dir);

// xi = alternator * F^{-T} eta; the resulting xi (x) eta is tangent to the
// det level set at F (tangent_test vanishes identically in exact and in
// floating-point arithmetic).
Vec2 tangent_basis(const Mat2& f, Vec2 eta);

// Rotation-factor SVD: F = rot(u_angle) * diag(s1, s2) * rot(v_angle)^T with
// s1 >= |s2|; s2 carries the sign of det F.
struct RotationSvd {
    double u_angle = 0.0;
    double v_angle = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
};
RotationSvd rotation_svd(const Mat2& f);

// F = Q1 * [[1, gamma], [0, 1]] * Q2 for F in SL(2), with gamma =
// sqrt(||F||^2 - 2) >= 0. Both factors are proper rotations (det = +1).
struct ShearDecomposition {
    Mat2 q1;
    double gamma = 0.0;
    Mat2 q2;
    double det_q1 = 1.0;
    double det_q2 = 1.0;

    Mat2 shear_factor() const { return Mat2::shear(gamma); }
    Mat2 reconstruct() const { return q1 * shear_factor() * q2; }
};
ShearDecomposition shear_decompose(const Mat2& f, double eps_det = kDefaultEpsDet);

inline bool in_sl2(const Mat2& f, double eps_det = kDefaultEpsDet)
{
    return std::abs(f.det() - 1.0) <= eps_det;
}
inline bool in_glp2(const Mat2& f) { return f.det() > 0.0; }

} // namespace slconvex
