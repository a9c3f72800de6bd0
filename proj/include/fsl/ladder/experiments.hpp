// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/energy/gagliardo.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/transforms.hpp"

namespace fsl {

struct StepRateResult {
    std::vector<std::pair<unsigned, double>> table;  // (n, energy of f - f_n)
    double slope = 0.0;                              // least-squares slope of log2(error) against n
};

inline double least_squares_slope(std::span<const double> x, std::span<const double> y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = n * sxx - sx * sx;
    return d == 0 ? 0.0 : (n * sxy - sx * sy) / d;
}

// Energy of f minus its dyadic step approximation, exactly: E(f) - 2E(f, f_n) + E(f_n)
// with all three terms in closed form.
inline StepRateResult step_rate_experiment(const GridFunction& f, double alpha, unsigned n_lo, unsigned n_hi)
{
    require(alpha > 0 && alpha < 1, "step_rate_experiment: the rate statement needs alpha in (0, 1)");
    require(n_lo <= n_hi, "step_rate_experiment: need n_lo <= n_hi");
    StepRateResult out;
    const double ef = grid_energy(f, alpha);
    const auto df = derivative(f);
    std::vector<double> ns, logs;
    bool all_positive = true;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const auto ds = derivative(snap_to_dyadic_step(f, n));
        const double e = std::max(0.0, ef - 2.0 * bilinear_form(df, ds, alpha) + bilinear_form(ds, ds, alpha));
        out.table.emplace_back(n, e);
        ns.push_back(n);
        logs.push_back(e > 0 ? std::log2(e) : 0.0);
        all_positive = all_positive && e > 0;
    }
    out.slope = all_positive ? least_squares_slope(ns, logs) : 0.0;
    return out;
}

// max over |xi| >= 1 of |f^(xi)| |xi| - 2, for f with values in [0,1] and total variation 2.
inline double bv_fourier_bound_check(const GridFunction& f, std::span<const double> xi_grid)
{
    for (double v : f.values()) require(v >= 0 && v <= 1, "bv_fourier_bound_check: values must lie in [0, 1]");
    require(std::abs(f.total_variation() - 2.0) <= 1e-9, "bv_fourier_bound_check: total variation must equal 2");
    double worst = -inf;
    for (double xi : xi_grid)
        if (std::abs(xi) >= 1.0) worst = std::max(worst, std::abs(fourier_at(f, xi)) * std::abs(xi) - 2.0);
    return worst;
}

} // namespace fsl
