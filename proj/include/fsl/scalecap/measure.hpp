// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/polyline.hpp"
#include "fsl/scalecap/compose.hpp"
#include "fsl/scalecap/scale.hpp"

namespace fsl {

// Exact \int_c^d phi for the piecewise-linear interpolant phi.
inline double integral(const GridFunction& phi, double c, double d)
{
    if (phi.is_zero() || d <= c) return 0.0;
    const Interval s = phi.support();
    c = std::max(c, s.lo);
    d = std::min(d, s.hi);
    if (d <= c) return 0.0;
    const double h = phi.step();
    const auto i0 = static_cast<std::ptrdiff_t>(std::floor((c - phi.origin()) / h));
    const auto i1 = static_cast<std::ptrdiff_t>(std::floor((d - phi.origin()) / h));
    double out = 0.0;
    for (std::ptrdiff_t i = i0; i <= i1; ++i) {
        const double lo = std::max(c, phi.x(i)), hi = std::min(d, phi.x(i + 1));
        if (hi <= lo) continue;
        const double a = phi.at(i), b = phi.at(i + 1);
        const double va = a + (b - a) * (lo - phi.x(i)) / h;
        const double vb = a + (b - a) * (hi - phi.x(i)) / h;
        out += 0.5 * (va + vb) * (hi - lo);
    }
    return out;
}

struct DensitySegment {
    Interval where;
    double density;
};

struct SignedMeasure {
    std::vector<Atom> atoms;
    std::vector<DensitySegment> density_segments;

    double total_mass() const
    {
        double m = 0.0;
        for (const auto& a : atoms) m += a.jump;
        for (const auto& d : density_segments) m += d.density * d.where.length();
        return m;
    }

    double positive_mass() const
    {
        double m = 0.0;
        for (const auto& a : atoms) m += std::max(0.0, a.jump);
        for (const auto& d : density_segments) m += std::max(0.0, d.density) * d.where.length();
        return m;
    }

    double integrate(const GridFunction& phi) const
    {
        double s = 0.0;
        for (const auto& a : atoms) s += a.jump * phi(a.at);
        for (const auto& d : density_segments) s += d.density * integral(phi, d.where.lo, d.where.hi);
        return s;
    }
};

// d(f o s): density equal to the slope of f o s on pieces where s has slope 1, nothing
// elsewhere (f o s is constant wherever s is).
inline SignedMeasure pushforward_measure(const Composition& c, const ScaleFunction& s)
{
    SignedMeasure m;
    const auto& p = c.exact;
    for (std::size_t k = 0; k + 1 < p.x.size(); ++k) {
        const double dx = p.x[k + 1] - p.x[k];
        const double dv = p.v[k + 1] - p.v[k];
        if (dv == 0.0) continue;
        if (s(p.x[k + 1]) - s(p.x[k]) == 0.0) continue;
        m.density_segments.push_back({{p.x[k], p.x[k + 1]}, dv / dx});
    }
    return m;
}

struct DualitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

// -\int (f o s) phi' dx against \int phi d(f o s); both sides are exact integrals.
inline DualitySides duality_pairing_check(const Composition& c, const ScaleFunction& s, const GridFunction& phi)
{
    DualitySides out;
    if (phi.is_zero()) return out;
    for (auto i = static_cast<std::ptrdiff_t>(phi.support_lo()) - 1; i <= static_cast<std::ptrdiff_t>(phi.support_hi()); ++i) {
        const double slope = (phi.at(i + 1) - phi.at(i)) / phi.step();
        if (slope != 0.0) out.lhs -= slope * c.exact.integral(phi.x(i), phi.x(i + 1));
    }
    out.rhs = pushforward_measure(c, s).integrate(phi);
    return out;
}

} // namespace fsl
