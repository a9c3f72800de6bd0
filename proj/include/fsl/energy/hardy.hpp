// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstddef>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"

namespace fsl {

struct HardySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

namespace detail {

// \int_{u0}^{u1} (p + s u)^2 u^{-alpha} du, skipping terms whose coefficient vanishes.
inline double weighted_square(double u0, double u1, double p, double s, double alpha)
{
    const double c[3] = {p * p, 2 * p * s, s * s};
    double r = 0.0;
    for (int k = 0; k < 3; ++k) {
        if (c[k] == 0.0) continue;
        const double e = k + 1 - alpha;
        r += c[k] * (std::pow(u1, e) - std::pow(u0, e)) / e;
    }
    return r;
}

} // namespace detail

// Both sides of
//   \int_{(a,b)} \int_{R\(a,b)} f(x)^2 |x-y|^{-1-alpha} dy dx
//     = (1/alpha) \int_{(a,b)} f(x)^2 (|x-a|^{-alpha} + |x-b|^{-alpha}) dx.
// The left side integrates numerically in both variables; the right side is exact per cell.
inline HardySides hardy_boundary_identity(const GridFunction& f, double a, double b, double alpha)
{
    require(a < b, "hardy_boundary_identity: need a < b");
    require(alpha > 0 && alpha < 2 && alpha != 1.0, "hardy_boundary_identity: alpha must lie in (0,1) or (1,2)");
    HardySides out;
    if (f.is_zero()) return out;
    const Interval s = f.support();
    require(s.lo >= a && s.hi <= b, "hardy_boundary_identity: support leaks outside (a, b)");

    boost::math::quadrature::exp_sinh<double> tail;
    auto outside = [&](double x) {
        auto ray = [alpha](double d) {
            return [d, alpha](double u) { return std::pow(d + u, -1.0 - alpha); };
        };
        return tail.integrate(ray(x - a)) + tail.integrate(ray(b - x));
    };

    const double h = f.step();
    for (auto i = static_cast<std::ptrdiff_t>(f.support_lo()) - 1; i <= static_cast<std::ptrdiff_t>(f.support_hi()); ++i) {
        const double x0 = f.x(i), x1 = f.x(i + 1);
        const double v0 = f.at(i), v1 = f.at(i + 1);
        if (v0 == 0.0 && v1 == 0.0) continue;
        const double slope = (v1 - v0) / h;
        out.lhs += boost::math::quadrature::gauss<double, 10>::integrate(
            [&](double x) {
                const double v = v0 + slope * (x - x0);
                return v * v * outside(x);
            },
            x0, x1);
        // near a: f = v0 + slope (u - u0) with u = x - a; near b: u = b - x runs backwards.
        const double ua0 = x0 - a, ua1 = x1 - a;
        out.rhs += detail::weighted_square(ua0, ua1, v0 - slope * ua0, slope, alpha);
        const double ub0 = b - x1, ub1 = b - x0;
        out.rhs += detail::weighted_square(ub0, ub1, v1 + slope * ub0, -slope, alpha);
    }
    out.rhs /= alpha;
    return out;
}

} // namespace fsl
