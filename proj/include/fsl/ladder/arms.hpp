// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/ladder/star.hpp"

namespace fsl {

struct ArmSplit {
    GridFunction left;   // h v (sup h) 1_[T, inf)
    GridFunction right;  // left - h
    double peak_point = 0.0;
};

// Writes a ladder-like h as the difference of two non-decreasing functions on the grid window.
inline ArmSplit arm_split(const GridFunction& h)
{
    require(!h.is_zero(), "arm_split: zero function");
    require(is_ladder_like(h), "arm_split: input is not ladder-like");
    const std::size_t t = peak_index(h);
    const double m = h[t];
    std::vector<double> l = h.values(), r(h.size(), 0.0);
    for (std::size_t i = t; i < h.size(); ++i) {
        l[i] = m;
        r[i] = m - h[i];
    }
    return {h.with_values(std::move(l)), h.with_values(std::move(r)), h.x(static_cast<std::ptrdiff_t>(t))};
}

} // namespace fsl
