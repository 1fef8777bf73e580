#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace slconvex {

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int points = 2;
    bool log_spaced = false;

    std::vector<double> make() const
    {
        std::vector<double> xs;
        xs.reserve(static_cast<std::size_t>(points));
        if (points == 1) {
            xs.push_back(lo);
            return xs;
        }
        if (log_spaced) {
            const double llo = std::log(lo), lhi = std::log(hi);
            for (int i = 0; i < points; ++i)
                xs.push_back(std::exp(llo + (lhi - llo) * i / (points - 1)));
        } else {
            for (int i = 0; i < points; ++i)
                xs.push_back(lo + (hi - lo) * i / (points - 1));
        }
        return xs;
    }
};

struct OracleConfig {
    int n_f = 500;        // deformation-gradient samples
    int n_eta = 16;       // directions per sample
    int n_t = 12;         // geometric step ladder
    double t_min = 0.05;
    double t_max = 2.0;
    double tau = 1e-9;    // violation tolerance, scaled by local energy magnitude
    int threads = 0;      // 0 = serial reference path; <0 = all hardware threads

    std::vector<double> ladder() const
    {
        std::vector<double> ts;
        ts.reserve(static_cast<std::size_t>(n_t));
        if (n_t == 1) {
            ts.push_back(t_min);
            return ts;
        }
        const double ratio = std::pow(t_max / t_min, 1.0 / (n_t - 1));
        double s = t_min;
        for (int i = 0; i < n_t; ++i, s *= ratio)
            ts.push_back(s);
        return ts;
    }
};

struct Config {
    double eps_det = 1e-10;      // SL(2) membership tolerance
    double tau = 1e-8;           // inequality slack tolerance (absolute)
    double boundary_factor = 10; // |slack| <= boundary_factor * tau flags a boundary case

    GridSpec gamma_grid{0.0, 8.0, 801, false};       // shear profile phi
    GridSpec t_grid{1.0, 16.0, 801, true};           // singular-value ratio profile h
    GridSpec lambda_grid{1.02, 4.0, 40, true};       // E-matrix sweep over (lambda, 1/lambda)
    GridSpec lambda_axis_grid{0.25, 4.0, 40, true};  // separate-convexity slice axes

    double log_lambda_range = 1.3862943611198906;    // ln 4, SL(2)/GL+(2) sampling law

    std::uint64_t seed = 12345;
    OracleConfig oracle;

    // I-grid for invariant-based criteria: I = 2 + gamma^2 over the gamma
    // grid, skipping gamma = 0 where dpsi/dI is genuinely singular for
    // profiles with phi'(0) != 0.
    std::vector<double> invariant_grid() const
    {
        std::vector<double> is;
        const auto gammas = gamma_grid.make();
        is.reserve(gammas.size());
        for (std::size_t i = 1; i < gammas.size(); ++i)
            is.push_back(2.0 + gammas[i] * gammas[i]);
        return is;
    }
};

} // namespace slconvex
