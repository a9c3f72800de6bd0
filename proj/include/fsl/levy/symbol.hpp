// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fsl/common.hpp"
#include "fsl/funcrep/io.hpp"
#include "fsl/levy/triplet.hpp"

namespace fsl {

struct SymbolCurve {
    std::vector<double> xi;
    std::vector<double> psi;
};

namespace detail {

// \int_0^inf (1 - cos(w x)) x^{-1-b} dx for w > 0.
//  [0, x0], x0 = min(1, 1/w): termwise integral of the cosine series, no cancellation.
//  [x0, X]: x0^{-b}/b - \int cos(w x) x^{-1-b}, Gauss-Kronrod over half periods.
//  [X, inf), X = x0 + 64 pi/w: four terms of the integration-by-parts expansion of the cosine integral.
inline double power_symbol_half(double w, double b)
{
    const double x0 = std::min(1.0, 1.0 / w);
    double series = 0.0, term = 1.0;
    const double wx = w * x0;
    for (int k = 1; k <= 40; ++k) {
        term *= wx * wx / ((2.0 * k - 1) * (2.0 * k));
        const double t = term * std::pow(x0, -b) / (2.0 * k - b);
        series += (k % 2 ? t : -t);
        if (std::abs(t) < 1e-18 * std::abs(series)) break;
    }

    auto g = [b](double x) { return std::pow(x, -1.0 - b); };
    const double half = pi / w;
    const int chunks = 64;
    // Doubling steps first while x^{-1-b} still varies a lot within one half period.
    std::vector<double> pts{x0};
    while (2.0 * pts.back() < x0 + half) pts.push_back(2.0 * pts.back());
    for (int j = 1; j <= chunks; ++j) pts.push_back(x0 + j * half);
    double cosine = 0.0;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        const double lo = pts[j], hi = pts[j + 1];
        double err = 0.0, l1 = 0.0;
        const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            [&](double x) { return std::cos(w * x) * g(x); }, lo, hi, 6, 1e-10, &err, &l1);
        if (!(err <= 1e-7 * l1))  // |K15 - G7| overstates the K15 error by orders of magnitude
            throw solver_error("levy_symbol: oscillatory quadrature failed for xi=" + fmt12(w) + " on [" + fmt12(lo) + ", " +
                               fmt12(hi) + "]");
        cosine += v;
    }
    const double X = x0 + chunks * half;
    const double s = std::sin(w * X), c = std::cos(w * X);
    const double g0 = g(X), g1 = (-1 - b) * g0 / X, g2 = (-2 - b) * g1 / X, g3 = (-3 - b) * g2 / X;
    cosine += -s * g0 / w - c * g1 / (w * w) + s * g2 / (w * w * w) + c * g3 / (w * w * w * w);

    return series + std::pow(x0, -b) / b - cosine;
}

} // namespace detail

// psi(xi) = sigma xi^2 / 2 + \int (1 - cos(xi x)) nu(dx).
inline double levy_psi(const LevyTriplet& t, double xi)
{
    const double w = std::abs(xi);
    if (w == 0.0) return 0.0;
    double s = 0.5 * t.sigma * w * w;
    for (const auto& [x, m] : t.atoms) s += 2.0 * m * (1.0 - std::cos(w * x));
    if (t.density && t.density->scale > 0) s += 2.0 * t.density->scale * detail::power_symbol_half(w, t.density->alpha);
    return s;
}

inline SymbolCurve levy_symbol(const LevyTriplet& t, std::span<const double> xi_grid)
{
    t.validate();
    SymbolCurve c;
    c.xi.assign(xi_grid.begin(), xi_grid.end());
    for (double xi : xi_grid) c.psi.push_back(levy_psi(t, xi));
    return c;
}

inline std::vector<double> log_spaced(double lo, double hi, std::size_t n)
{
    require(lo > 0 && hi > lo && n >= 2, "log_spaced: need 0 < lo < hi and n >= 2");
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k)
        v[k] = lo * std::pow(hi / lo, static_cast<double>(k) / static_cast<double>(n - 1));
    return v;
}

struct FiniteVariation {
    bool finite = false;
    double value = inf;  // \int (1 ^ |x|) nu(dx) over both half-lines
};

inline FiniteVariation finite_variation_test(const LevyTriplet& t)
{
    t.validate();
    FiniteVariation out;
    double v = 0.0;
    for (const auto& [x, m] : t.atoms) v += 2.0 * m * std::min(1.0, x);
    if (t.density && t.density->scale > 0) {
        const double b = t.density->alpha;
        v = b < 1.0 ? v + 2.0 * t.density->scale * (1.0 / (1.0 - b) + 1.0 / b) : inf;
    }
    out.value = v;
    out.finite = t.sigma == 0.0 && std::isfinite(v);
    return out;
}

} // namespace fsl
