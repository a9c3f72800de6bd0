// SPDX-License-Identifier: MIT
#pragma once

// Brute-force reference computations for the tests.  None of them reuse the closed-form
// stencils or product rules of the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "fsl/funcrep/grid_function.hpp"

namespace oracle {

// A function vanishing outside [lo, lo + cells h] and linear on each cell, jumps allowed.
struct CellwiseLinear {
    std::function<double(double)> f;
    double lo;
    double h;
    std::size_t cells;
};

// D(z) = \int (f(y+z) - f(y))^2 dy.  The integrand is a quadratic between consecutive
// points of {breaks} u {breaks - z}, so 4-point Gauss is exact on each piece.
inline double shift_difference(const CellwiseLinear& c, double z)
{
    std::vector<double> pts;
    for (std::size_t i = 0; i <= c.cells; ++i) {
        const double x = c.lo + static_cast<double>(i) * c.h;
        pts.push_back(x);
        pts.push_back(x - z);
    }
    std::sort(pts.begin(), pts.end());
    double d = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        if (pts[k + 1] <= pts[k]) continue;
        d += boost::math::quadrature::gauss<double, 4>::integrate(
            [&](double y) {
                const double v = c.f(y + z) - c.f(y);
                return v * v;
            },
            pts[k], pts[k + 1]);
    }
    return d;
}

// \iint (f(x)-f(y))^2 |x-y|^{-1-alpha} = 2 \int_0^inf D(z) z^{-1-alpha} dz.  D is a cubic in z
// between multiples of h, vanishing at 0, so on [0,h] it is fitted from three samples and
// integrated analytically (the linear term only appears with jumps and needs alpha < 1).
// Beyond the support width W the shifted copies no longer overlap and D(z) = 2 ||f||^2.
inline double gagliardo(const CellwiseLinear& c, double alpha)
{
    const double h = c.h;
    const double w = static_cast<double>(c.cells) * h;
    // D(z)/z = c1 + c2 z + c3 z^2 through three points.
    const double t1 = h / 3.0, t2 = 2.0 * h / 3.0, t3 = h;
    const double s1 = shift_difference(c, t1) / t1, s2 = shift_difference(c, t2) / t2, s3 = shift_difference(c, t3) / t3;
    const double c3 = ((s3 - s1) / (t3 - t1) - (s2 - s1) / (t2 - t1)) / (t3 - t2);
    const double c2 = (s2 - s1) / (t2 - t1) - c3 * (t1 + t2);
    const double c1 = s1 - c2 * t1 - c3 * t1 * t1;
    double e = c2 * std::pow(h, 2.0 - alpha) / (2.0 - alpha) + c3 * std::pow(h, 3.0 - alpha) / (3.0 - alpha);
    if (alpha < 1.0) e += c1 * std::pow(h, 1.0 - alpha) / (1.0 - alpha);
    for (double z0 = h; z0 < w - 1e-9 * h; z0 += h)
        e += boost::math::quadrature::gauss<double, 20>::integrate(
            [&](double z) { return shift_difference(c, z) * std::pow(z, -1.0 - alpha); }, z0, std::min(w, z0 + h));
    double l2 = 0.0;
    for (std::size_t i = 0; i < c.cells; ++i) {
        const double x = c.lo + static_cast<double>(i) * h;
        l2 += boost::math::quadrature::gauss<double, 4>::integrate([&](double y) { return c.f(y) * c.f(y); }, x, x + h);
    }
    e += 2.0 * l2 * std::pow(w, -alpha) / alpha;
    return 2.0 * e;
}

inline double gagliardo(const fsl::GridFunction& f, double alpha)
{
    if (f.is_zero()) return 0.0;
    const auto first = static_cast<std::ptrdiff_t>(f.support_lo()) - 1;
    const auto cells = f.support_hi() - f.support_lo() + 2;
    return gagliardo(CellwiseLinear{[&f](double y) { return f(y); }, f.x(first), f.step(), cells}, alpha);
}

// Bilinear form by polarization.
inline double gagliardo_bilinear(const fsl::GridFunction& f, const fsl::GridFunction& g, double alpha)
{
    std::vector<double> p(f.size()), m(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        p[i] = f[i] + g[i];
        m[i] = f[i] - g[i];
    }
    return 0.25 * (gagliardo(fsl::GridFunction(f.origin(), f.step(), p), alpha) -
                   gagliardo(fsl::GridFunction(f.origin(), f.step(), m), alpha));
}

// 2 \int_0^inf (1 - cos u) u^{-1-alpha} du, from the reflection form of the Gamma function.
inline double symbol_constant(double alpha)
{
    return M_PI / (std::tgamma(1.0 + alpha) * std::sin(M_PI * alpha / 2.0));
}

} // namespace oracle
