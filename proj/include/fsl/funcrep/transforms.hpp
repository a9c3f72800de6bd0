// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/step_function.hpp"

namespace fsl {

struct FourierSample {
    double xi;
    std::complex<double> value;
};

// Exact transform (2pi)^{-1/2} \int f(x) e^{ix xi} dx of the piecewise-linear interpolant.
// Each hat contributes e^{i x_j xi} h sinc^2(xi h / 2); the node sum runs by Horner.
inline std::complex<double> fourier_at(const GridFunction& f, double xi)
{
    if (f.is_zero()) return {0.0, 0.0};
    const double h = f.step();
    const double u = 0.5 * xi * h;
    const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
    const std::complex<double> z = std::polar(1.0, h * xi);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = f.support_hi() + 1; j-- > f.support_lo();) acc = acc * z + f[j];
    const double x0 = f.x(static_cast<std::ptrdiff_t>(f.support_lo()));
    return std::polar(1.0, x0 * xi) * acc * (h * sinc * sinc / std::sqrt(2.0 * pi));
}

inline std::vector<double> symmetric_frequencies(double xi_max, std::size_t n_freq)
{
    std::vector<double> xi(n_freq);
    for (std::size_t k = 0; k < n_freq; ++k)
        xi[k] = -xi_max + 2.0 * xi_max * static_cast<double>(k) / static_cast<double>(n_freq - 1);
    return xi;
}

inline std::vector<FourierSample> discrete_fourier(const GridFunction& f, double xi_max, std::size_t n_freq)
{
    require(xi_max > 0, "discrete_fourier: xi_max must be positive");
    require(n_freq >= 2, "discrete_fourier: need at least 2 frequencies");
    for (double v : f.values()) require(std::isfinite(v), "discrete_fourier: non-finite sample");
    std::vector<FourierSample> out;
    out.reserve(n_freq);
    for (double xi : symmetric_frequencies(xi_max, n_freq)) out.push_back({xi, fourier_at(f, xi)});
    return out;
}

// Normal contraction h - ((-eps) v h ^ eps): shrinks |h| by eps and writes exact zeros.
inline GridFunction epsilon_contraction(const GridFunction& h, double eps)
{
    require(eps >= 0, "epsilon_contraction: eps must be non-negative");
    std::vector<double> v = h.values();
    for (double& e : v) {
        if (std::abs(e) <= eps)
            e = 0.0;
        else
            e = e > 0 ? e - eps : e + eps;
    }
    return h.with_values(std::move(v));
}

// Left-endpoint dyadic step approximation: level f(i/2^n) on (i/2^n, (i+1)/2^n].
inline StepFunction snap_to_dyadic_step(const GridFunction& f, unsigned n)
{
    if (f.is_zero()) return {};
    const double scale = std::ldexp(1.0, static_cast<int>(n));
    const Interval s = f.support();
    const auto i0 = static_cast<long long>(std::floor(s.lo * scale));
    const auto i1 = static_cast<long long>(std::ceil(s.hi * scale));
    std::vector<double> breaks, levels;
    for (long long i = i0; i <= i1; ++i) breaks.push_back(static_cast<double>(i) / scale);
    for (long long i = i0; i < i1; ++i) levels.push_back(f(static_cast<double>(i) / scale));
    if (breaks.size() < 2) return {};
    return {std::move(breaks), std::move(levels)};
}

} // namespace fsl
