// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"

namespace fsl {

enum class RampProfile { linear, smooth, concave };

inline std::string to_string(RampProfile p)
{
    switch (p) {
    case RampProfile::linear: return "linear";
    case RampProfile::smooth: return "smooth";
    case RampProfile::concave: return "concave";
    }
    return "linear";
}

inline RampProfile ramp_profile_from_string(const std::string& s)
{
    if (s == "linear") return RampProfile::linear;
    if (s == "smooth") return RampProfile::smooth;
    if (s == "concave") return RampProfile::concave;
    throw precondition_error("unknown ramp profile '" + s + "'");
}

// 1 on [a,b], 0 outside (a-rho, b+rho), monotone ramps of the given shape.
struct PlateauSpec {
    double a = 0.0;
    double b = 1.0;
    double rho = 0.1;
    RampProfile profile = RampProfile::linear;

    // Ramp height at relative position t in [0,1] (0 at the outer edge).
    double ramp(double t) const
    {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        switch (profile) {
        case RampProfile::linear: return t;
        case RampProfile::smooth: return t * t * (3.0 - 2.0 * t);
        case RampProfile::concave: return t * (2.0 - t);
        }
        return t;
    }

    double operator()(double x) const
    {
        if (x >= a && x <= b) return 1.0;
        if (x < a) return ramp(1.0 - (a - x) / rho);
        return ramp(1.0 - (x - b) / rho);
    }
};

// Samples the plateau on a grid with a node exactly at a, so the maximum 1 is attained
// and the total variation is exactly 2.
inline GridFunction make_plateau(const PlateauSpec& spec, double step)
{
    require(spec.a < spec.b, "make_plateau: need a < b");
    require(spec.rho > 0 && step > 0, "make_plateau: rho and step must be positive");
    require(spec.rho > 2.0 * step, "make_plateau: degenerate spec, rho <= 2*step leaves fewer than 2 nodes per ramp");

    const auto k_left = static_cast<std::size_t>(std::ceil(spec.rho / step));
    const auto m_plateau = static_cast<std::size_t>(std::floor((spec.b - spec.a) / step));
    const std::size_t k_right = k_left + 1;
    const std::size_t n = k_left + m_plateau + k_right + 1;

    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < k_left) {
            const double d = static_cast<double>(k_left - i) * step;
            v[i] = spec.ramp(1.0 - d / spec.rho);
        } else if (i <= k_left + m_plateau) {
            v[i] = 1.0;
        } else {
            const double d = static_cast<double>(i - k_left) * step - (spec.b - spec.a);
            v[i] = d <= 0.0 ? 1.0 : spec.ramp(1.0 - d / spec.rho);
        }
    }
    return {spec.a - static_cast<double>(k_left) * step, step, std::move(v)};
}

} // namespace fsl
