// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/polyline.hpp"
#include "fsl/scalecap/scale.hpp"

namespace fsl {

struct Composition {
    GridFunction sampled;  // f o s on a uniform grid over the window
    Polyline exact;        // f o s itself: linear between breakpoints of s and preimages of f's nodes
    double lipschitz = 0.0;
    Interval window;
};

// f o s for f given on the range coordinate.  Between consecutive breakpoints of s and
// preimages of f's nodes both maps are affine, so the polyline is exact.
inline Composition compose_scale(const GridFunction& f, const ScaleFunction& s, Interval window, double step)
{
    require(window.lo < window.hi && step > 0, "compose_scale: need a non-empty window and positive step");
    const double y0 = s(window.lo), y1 = s(window.hi);
    if (!f.is_zero()) {
        const Interval sup = f.support();
        require(sup.lo >= y0 && sup.hi <= y1, "compose_scale: support of f escapes s(window)");
    }
    Composition c;
    c.window = window;
    c.lipschitz = f.lipschitz();

    std::vector<double> knots{window.lo, window.hi};
    for (double b : s.breakpoints_within(window.lo, window.hi)) knots.push_back(b);
    for (std::ptrdiff_t i = -1; i <= static_cast<std::ptrdiff_t>(f.size()); ++i) {
        const double y = f.x(i);
        if (y > y0 && y < y1) knots.push_back(s.preimage(y));
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    knots.erase(std::remove_if(knots.begin(), knots.end(), [&](double x) { return x < window.lo || x > window.hi; }),
                knots.end());
    c.exact.x = knots;
    for (double x : knots) c.exact.v.push_back(f(s(x)));

    const auto n = static_cast<std::size_t>(std::floor(window.length() / step + 1e-9)) + 1;
    c.sampled = GridFunction::sample([&](double x) { return f(s(x)); }, window.lo, step, n);
    return c;
}

} // namespace fsl
