// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"

namespace fsl {

// Reflection of a plateau-shaped g at its plateau: running infimum from x to a on the
// left ramp and from b to x on the right ramp.
inline GridFunction skorokhod_star(const GridFunction& g, double a, double b, double rho)
{
    require(a < b && rho > 0, "skorokhod_star: need a < b and rho > 0");
    const std::size_t n = g.size();
    std::size_t first_in = n, last_in = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = g.x(static_cast<std::ptrdiff_t>(i));
        require(g[i] >= 0 && g[i] <= 1, "skorokhod_star: g must take values in [0, 1] (node " + std::to_string(i) + ")");
        if (x >= a && x <= b) {
            require(g[i] == 1.0, "skorokhod_star: g must equal 1 on [a, b] (node " + std::to_string(i) + ")");
            first_in = std::min(first_in, i);
            last_in = i;
        }
        if (x <= a - rho || x >= b + rho)
            require(g[i] == 0.0, "skorokhod_star: g must vanish outside (a-rho, b+rho) (node " + std::to_string(i) + ")");
    }
    require(first_in < n, "skorokhod_star: no grid node inside [a, b]");
    std::vector<double> v = g.values();
    double m = 1.0;
    for (std::size_t i = first_in; i-- > 0;) v[i] = m = std::min(m, g[i]);
    m = 1.0;
    for (std::size_t i = last_in + 1; i < n; ++i) v[i] = m = std::min(m, g[i]);
    return g.with_values(std::move(v));
}

struct LadderStar {
    GridFunction star;
    double peak_point = 0.0;
    std::size_t peak_index = 0;
};

// First index attaining the maximum (the infimum of the maximum points).
inline std::size_t peak_index(const GridFunction& f)
{
    std::size_t t = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] > f[t]) t = i;
    return t;
}

// Ladder-like minorant: running infimum of f from x to the peak T.
inline LadderStar ladder_star(const GridFunction& f)
{
    require(!f.is_zero(), "ladder_star: zero function has no peak");
    for (double v : f.values()) require(v >= 0, "ladder_star: f must be non-negative");
    const std::size_t t = peak_index(f);
    std::vector<double> v = f.values();
    double m = f[t];
    for (std::size_t i = t; i-- > 0;) v[i] = m = std::min(m, f[i]);
    m = f[t];
    for (std::size_t i = t + 1; i < f.size(); ++i) v[i] = m = std::min(m, f[i]);
    return {f.with_values(std::move(v)), f.x(static_cast<std::ptrdiff_t>(t)), t};
}

// Non-negative, non-decreasing up to the first maximum, non-increasing after it.
inline bool is_ladder_like(const GridFunction& h)
{
    const std::size_t t = peak_index(h);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 0) return false;
        if (i > 0 && i <= t && h[i] < h[i - 1]) return false;
        if (i > t && h[i] > h[i - 1]) return false;
    }
    return true;
}

} // namespace fsl
