// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/step_function.hpp"

namespace fsl {

// Continuous piecewise-linear function on non-uniform knots, zero outside [x_0, x_n].
// End values may be nonzero, in which case the function jumps there.
struct Polyline {
    std::vector<double> x;
    std::vector<double> v;

    double operator()(double t) const
    {
        if (x.empty() || t < x.front() || t > x.back()) return 0.0;
        auto it = std::upper_bound(x.begin(), x.end(), t);
        if (it == x.end()) return v.back();
        const std::size_t k = static_cast<std::size_t>(it - x.begin());
        const double w = (t - x[k - 1]) / (x[k] - x[k - 1]);
        return v[k - 1] + w * (v[k] - v[k - 1]);
    }

    // Exact integral of the function over [a, b].
    double integral(double a, double b) const
    {
        if (x.empty()) return 0.0;
        a = std::max(a, x.front());
        b = std::min(b, x.back());
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
            const double lo = std::max(a, x[k]);
            const double hi = std::min(b, x[k + 1]);
            if (hi <= lo) continue;
            s += 0.5 * ((*this)(lo) + (*this)(hi)) * (hi - lo);
        }
        return s;
    }

    double l2_norm_sq() const
    {
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
            const double a = v[k], b = v[k + 1];
            s += (x[k + 1] - x[k]) * (a * a + a * b + b * b) / 3.0;
        }
        return s;
    }
};

struct Atom {
    double at;
    double jump;
};

struct Segment {
    double lo;
    double hi;
    double slope;
};

// The distributional derivative of a compactly supported function that is
// piecewise linear between jumps: point masses plus piecewise-constant density.
// Every quadratic form in this library is evaluated on this representation.
struct DerivativeMeasure {
    std::vector<Atom> atoms;
    std::vector<Segment> segments;

    bool has_atoms() const
    {
        return std::any_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.jump != 0.0; });
    }

    DerivativeMeasure& operator+=(const DerivativeMeasure& o)
    {
        atoms.insert(atoms.end(), o.atoms.begin(), o.atoms.end());
        segments.insert(segments.end(), o.segments.begin(), o.segments.end());
        return *this;
    }

    DerivativeMeasure negated() const
    {
        DerivativeMeasure m = *this;
        for (auto& a : m.atoms) a.jump = -a.jump;
        for (auto& s : m.segments) s.slope = -s.slope;
        return m;
    }
};

inline DerivativeMeasure derivative(const GridFunction& f)
{
    DerivativeMeasure m;
    if (f.is_zero()) return m;
    const auto lo = static_cast<std::ptrdiff_t>(f.support_lo()) - 1;
    const auto hi = static_cast<std::ptrdiff_t>(f.support_hi()) + 1;
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
        const double d = f.at(i + 1) - f.at(i);
        if (d != 0.0) m.segments.push_back({f.x(i), f.x(i + 1), d / f.step()});
    }
    return m;
}

inline DerivativeMeasure derivative(const StepFunction& f)
{
    DerivativeMeasure m;
    const auto j = f.jumps();
    for (std::size_t i = 0; i < j.size(); ++i)
        if (j[i] != 0.0) m.atoms.push_back({f.breakpoints()[i], j[i]});
    return m;
}

inline DerivativeMeasure derivative(const Polyline& f)
{
    DerivativeMeasure m;
    if (f.x.empty()) return m;
    if (f.v.front() != 0.0) m.atoms.push_back({f.x.front(), f.v.front()});
    for (std::size_t k = 0; k + 1 < f.x.size(); ++k) {
        const double d = f.v[k + 1] - f.v[k];
        if (d != 0.0) m.segments.push_back({f.x[k], f.x[k + 1], d / (f.x[k + 1] - f.x[k])});
    }
    if (f.v.back() != 0.0) m.atoms.push_back({f.x.back(), -f.v.back()});
    return m;
}

} // namespace fsl
