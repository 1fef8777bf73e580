#pragma once

// ScalarProfile: a scalar function of one variable with optional analytic
// first and second derivatives. When a derivative is absent it is estimated
// by central differences; near the lower domain boundary one-sided stencils
// of matching order are used.
//
// Step laws: first derivatives use h1(x) = max(1e-5, 1e-5 |x|). Second
// derivatives use the wider h2(x) = max(1e-3, 1e-3 |x|): the eps/h^2 rounding
// floor of a second difference at h = 1e-5 is ~1e-5 |f|, far too coarse for
// slack checks at tau = 1e-8, while at h = 1e-3 it drops to ~1e-9 |f| with
// truncation still ~1e-6 relative for smooth profiles.

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "slconvex/errors.hpp"

namespace slconvex {

enum class DerivativeMode { Analytic, CentralDifference };

struct ScalarProfile {
    std::function<double(double)> eval;
    std::function<double(double)> d1; // may be empty
    std::function<double(double)> d2; // may be empty
    double domain_lo = 0.0;

    DerivativeMode mode() const
    {
        return (d1 && d2) ? DerivativeMode::Analytic : DerivativeMode::CentralDifference;
    }

    double value(double x) const { return eval(x); }

    double deriv1(double x) const
    {
        if (d1)
            return d1(x);
        const double h = fd_step1(x);
        if (x - h < domain_lo) {
            // second-order forward stencil
            return (-3.0 * eval(x) + 4.0 * eval(x + h) - eval(x + 2.0 * h)) / (2.0 * h);
        }
        return (eval(x + h) - eval(x - h)) / (2.0 * h);
    }

    double deriv2(double x) const
    {
        if (d2)
            return d2(x);
        const double h = fd_step2(x);
        if (x - h < domain_lo) {
            // second-order forward stencil
            return (2.0 * eval(x) - 5.0 * eval(x + h) + 4.0 * eval(x + 2.0 * h) -
                    eval(x + 3.0 * h)) /
                   (h * h);
        }
        return (eval(x + h) - 2.0 * eval(x) + eval(x - h)) / (h * h);
    }

    static double fd_step1(double x) { return std::max(1e-5, 1e-5 * std::abs(x)); }
    static double fd_step2(double x) { return std::max(1e-3, 1e-3 * std::abs(x)); }
};

inline ScalarProfile make_profile(std::function<double(double)> eval, double domain_lo = 0.0)
{
    ScalarProfile p;
    p.eval = std::move(eval);
    p.domain_lo = domain_lo;
    return p;
}

inline ScalarProfile make_profile(std::function<double(double)> eval,
                                  std::function<double(double)> d1,
                                  std::function<double(double)> d2, double domain_lo = 0.0)
{
    ScalarProfile p;
    p.eval = std::move(eval);
    p.d1 = std::move(d1);
    p.d2 = std::move(d2);
    p.domain_lo = domain_lo;
    return p;
}

} // namespace slconvex
