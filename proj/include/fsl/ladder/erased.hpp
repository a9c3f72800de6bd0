// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/interval_set.hpp"

namespace fsl {

struct ErasedCheck {
    bool erased = false;
    IntervalSet witness;  // the components of {f < g}
};

// Nodal definition: f <= g at every node, and f takes a single value on every maximal
// run of nodes where f < g.  The component reported for a run is the open interval
// between the two bounding nodes where f = g.
inline ErasedCheck is_erased_function(const GridFunction& f, const GridFunction& g)
{
    require(f.same_grid(g), "is_erased_function: grid mismatch");
    for (std::size_t i = 0; i < f.size(); ++i)
        require(f[i] >= 0 && g[i] >= 0, "is_erased_function: functions must be non-negative");
    ErasedCheck out;
    out.erased = true;
    std::vector<Interval> parts;
    std::size_t i = 0;
    while (i < f.size()) {
        if (f[i] > g[i]) out.erased = false;
        if (!(f[i] < g[i])) {
            ++i;
            continue;
        }
        const std::size_t first = i;
        while (i < f.size() && f[i] < g[i]) {
            if (f[i] != f[first]) out.erased = false;
            ++i;
        }
        parts.push_back({f.x(static_cast<std::ptrdiff_t>(first) - 1), f.x(static_cast<std::ptrdiff_t>(i))});
    }
    out.witness = IntervalSet(std::move(parts));
    return out;
}

} // namespace fsl
