// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "fsl/common.hpp"
#include "fsl/funcrep/interval_set.hpp"
#include "fsl/funcrep/io.hpp"
#include "fsl/scalecap/capacity.hpp"

namespace fsl {

struct ConcentrationResult {
    double cap_g_in_window = 0.0;
    double cap_window = 0.0;
    double ratio = 0.0;

    // One-sided: a ratio near 1 never certifies the opposite.
    bool proper(double margin) const { return ratio < 1.0 - margin; }

    std::string verdict_line(double margin) const
    {
        return std::string(proper(margin) ? "PROPER" : "INCONCLUSIVE") + " (ratio=" + fmt12(ratio) + ")";
    }
};

// Cap(G n W) / Cap(W) at matched resolution on a shared domain.  A ratio clearly below 1
// shows that capacity is not concentrated on G, which makes the subspace induced by the
// scale function of G proper.
inline ConcentrationResult concentration_test(const IntervalSet& g, double alpha_star, Interval window, double step,
                                              double domain_factor = 8.0)
{
    require(window.lo < window.hi, "concentration_test: empty window");
    const IntervalSet w({window});
    const Interval domain = default_capacity_domain(w, domain_factor);
    ConcentrationResult out;
    out.cap_window = capacity_estimate(w, alpha_star, domain, step).value;
    out.cap_g_in_window = capacity_estimate(g.intersect(window), alpha_star, domain, step).value;
    out.ratio = out.cap_window > 0 ? out.cap_g_in_window / out.cap_window : 0.0;
    return out;
}

} // namespace fsl
