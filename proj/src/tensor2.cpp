#include "slconvex/tensor2.hpp"

#include <algorithm>
#include <sstream>

namespace slconvex {

namespace {

void require_finite(const Mat2& m, const char* op)
{
    if (!m.finite())
        throw DomainError(std::string(op) + ": non-finite matrix entries");
}

} // namespace

Vec2 Vec2::normalized() const
{
    const double n = norm();
    if (n == 0.0)
        throw DomainError("Vec2::normalized: zero vector");
    return {x / n, y / n};
}

double Mat2::max_abs() const
{
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
}

Mat2 Mat2::inverse() const
{
    const double d = det();
    if (d == 0.0)
        throw SingularMatrixError("Mat2::inverse: singular matrix (det = 0)");
    return (1.0 / d) * Mat2{a22, -a12, -a21, a11};
}

Mat2 Mat2::inverse_transpose() const
{
    const double d = det();
    if (d == 0.0)
        throw SingularMatrixError("Mat2::inverse_transpose: singular matrix (det = 0)");
    return (1.0 / d) * cofactor();
}

std::string to_string(const Mat2& m)
{
    std::ostringstream os;
    os.precision(17);
    os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
    return os.str();
}

RankOneDirection::RankOneDirection(Vec2 xi_, Vec2 eta_) : xi(xi_), eta(eta_)
{
    if (!xi.finite() || !eta.finite())
        throw DomainError("RankOneDirection: non-finite leg");
    if (xi.is_zero() || eta.is_zero())
        throw DomainError("RankOneDirection: zero leg makes xi (x) eta rank zero");
}

double det_expand(const Mat2& f, const Mat2& h)
{
    require_finite(f, "det_expand");
    require_finite(h, "det_expand");
    const double det_f = f.det();
    if (det_f == 0.0)
        return (f + h).det();
    // det F * <F^{-T}, H> computed division-free as <cof F, H>.
    return det_f + inner(f.cofactor(), h) + h.det();
}

SingularPair singular_values(const Mat2& f)
{
    require_finite(f, "singular_values");
    const double d = f.det();
    if (d == 0.0)
        throw SingularMatrixError("singular_values: singular input " + to_string(f));
    const double s = f.frobenius_sq();
    const double ad = std::abs(d);
    // s - 2|d| >= 0 always; clamp the rounding residue.
    const double spread = std::sqrt(std::max(s - 2.0 * ad, 0.0));
    const double lmax = 0.5 * (std::sqrt(s + 2.0 * ad) + spread);
    SingularPair sv;
    sv.lmax = lmax;
    sv.lmin = ad / lmax;
    sv.I = s;
    sv.gamma = spread;
    return sv;
}

double tangent_test(const Mat2& f, const RankOneDirection& dir)
{
    require_finite(f, "tangent_test");
    const Mat2 f_inv_t = f.inverse_transpose();
    return dot(dir.xi, f_inv_t * dir.eta);
}

Vec2 tangent_basis(const Mat2& f, Vec2 eta)
{
    require_finite(f, "tangent_basis");
    if (eta.is_zero())
        throw DomainError("tangent_basis: eta must be nonzero");
    const Vec2 m = f.inverse_transpose() * eta;
    // alternator * m = (m.y, -m.x); <xi, m> cancels exactly.
    return {m.y, -m.x};
}

RotationSvd rotation_svd(const Mat2& f)
{
    require_finite(f, "rotation_svd");
    const double e = 0.5 * (f.a11 + f.a22);
    const double fm = 0.5 * (f.a11 - f.a22);
    const double g = 0.5 * (f.a21 + f.a12);
    const double h = 0.5 * (f.a21 - f.a12);
    const double q = std::hypot(e, h);
    const double r = std::hypot(fm, g);
    const double a1 = (fm == 0.0 && g == 0.0) ? 0.0 : std::atan2(g, fm);
    const double a2 = (e == 0.0 && h == 0.0) ? 0.0 : std::atan2(h, e);
    RotationSvd out;
    out.u_angle = 0.5 * (a1 + a2);
    out.v_angle = 0.5 * (a1 - a2);
    out.s1 = q + r;
    out.s2 = q - r;
    return out;
}

ShearDecomposition shear_decompose(const Mat2& f, double eps_det)
{
    require_finite(f, "shear_decompose");
    if (std::abs(f.det() - 1.0) > eps_det)
        throw DomainError("shear_decompose: matrix not in SL(2), det = " + std::to_string(f.det()));

    const double gamma = std::sqrt(std::max(f.frobenius_sq() - 2.0, 0.0));
    const Mat2 k = Mat2::shear(gamma);

    // F and K share singular values; align their rotation frames.
    const RotationSvd sf = rotation_svd(f);
    const RotationSvd sk = rotation_svd(k);

    ShearDecomposition out;
    out.gamma = gamma;
    out.q1 = Mat2::rotation(sf.u_angle - sk.u_angle);
    out.q2 = Mat2::rotation(sk.v_angle - sf.v_angle);
    out.det_q1 = out.q1.det();
    out.det_q2 = out.q2.det();
    return out;
}

} // namespace slconvex
