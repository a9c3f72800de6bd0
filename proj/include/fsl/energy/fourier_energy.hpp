// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/energy/gagliardo.hpp"
#include "fsl/energy/report.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/transforms.hpp"

namespace fsl {

// \int (1 - cos(xi x)) |x|^{-1-alpha} dx = c |xi|^alpha.
inline double stable_symbol_constant(double alpha)
{
    require(alpha > 0 && alpha < 2, "stable_symbol_constant: alpha must lie in (0, 2)");
    if (alpha == 1.0) return pi;
    return 2.0 * std::tgamma(1.0 - alpha) * std::cos(0.5 * pi * alpha) / alpha;
}

namespace detail {

// \int_{x0}^{x1} (A + B t) t^alpha dt for 0 <= x0 <= x1.
inline double weighted_linear(double x0, double x1, double A, double B, double alpha)
{
    return A * (std::pow(x1, alpha + 1) - std::pow(x0, alpha + 1)) / (alpha + 1) +
           B * (std::pow(x1, alpha + 2) - std::pow(x0, alpha + 2)) / (alpha + 2);
}

// \int_{x0}^{x1} g(t) |t|^alpha dt for g linear through (x0,g0), (x1,g1).
inline double cell_integral(double x0, double x1, double g0, double g1, double alpha)
{
    const double B = (g1 - g0) / (x1 - x0);
    const double A = g0 - B * x0;
    if (x0 >= 0) return weighted_linear(x0, x1, A, B, alpha);
    if (x1 <= 0) return weighted_linear(-x1, -x0, A, -B, alpha);
    return weighted_linear(0, x1, A, B, alpha) + weighted_linear(0, -x0, A, -B, alpha);
}

} // namespace detail

// Mean-square asymptotics of the transform of a piecewise-linear function,
// |f^(xi)|^2 ~ sum(slope jumps^2) / (2 pi xi^4), integrated over |xi| > xi_max.
inline double fourier_tail_estimate(const GridFunction& f, double alpha, double xi_max)
{
    if (f.is_zero()) return 0.0;
    double s = 0.0;
    const auto lo = static_cast<std::ptrdiff_t>(f.support_lo()) - 1;
    const auto hi = static_cast<std::ptrdiff_t>(f.support_hi()) + 1;
    for (std::ptrdiff_t i = lo; i <= hi; ++i) {
        const double j = (f.at(i + 1) - 2 * f.at(i) + f.at(i - 1)) / f.step();
        s += j * j;
    }
    return s / pi * std::pow(xi_max, alpha - 3.0) / (3.0 - alpha);
}

// \int |f^(xi)|^2 |xi|^alpha d xi: product integration on the symmetric grid (|f^|^2
// linear per cell, weight exact) plus the analytic tail beyond xi_max.
inline double fourier_energy(const GridFunction& f, const EnergyParams& p, double xi_max, std::size_t n_freq)
{
    p.validate();
    if (f.is_zero()) return 0.0;
    const auto s = discrete_fourier(f, xi_max, n_freq);
    double e = 0.0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
        e += detail::cell_integral(s[k].xi, s[k + 1].xi, std::norm(s[k].value), std::norm(s[k + 1].value), p.alpha);
    return e + fourier_tail_estimate(f, p.alpha, xi_max);
}

// Stores C(alpha) = 2 * fourier / gagliardo, averaged over the sample functions.
inline EnergyParams calibrate_c_of_alpha(std::span<const GridFunction> samples, EnergyParams p, double xi_max,
                                         std::size_t n_freq)
{
    require(!samples.empty(), "calibrate_c_of_alpha: need at least one sample");
    double sum = 0.0;
    for (const auto& f : samples) {
        const double g = grid_energy(f, p.alpha);
        require(g > 0, "calibrate_c_of_alpha: zero-energy sample");
        sum += 2.0 * fourier_energy(f, p, xi_max, n_freq) / g;
    }
    p.c_of_alpha = sum / static_cast<double>(samples.size());
    return p;
}

} // namespace fsl
