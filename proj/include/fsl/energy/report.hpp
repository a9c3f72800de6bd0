// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/io.hpp"

namespace fsl {

struct EnergyParams {
    double alpha = 0.5;
    std::optional<double> c_of_alpha;  // calibrated Fourier/Gagliardo normalization, never assumed
    double divergence_ratio = 1.15;
    unsigned max_refinements = 6;

    double alpha_star() const { return 2.0 - alpha; }

    void validate() const
    {
        require(alpha > 0 && alpha <= 2, "EnergyParams: alpha must lie in (0, 2]");
        require(!c_of_alpha || *c_of_alpha > 0, "EnergyParams: c_of_alpha must be positive");
        require(divergence_ratio > 1, "EnergyParams: divergence_ratio must exceed 1");
    }
};

struct TracePoint {
    double resolution;  // node count or inverse ramp width; grows along the trace
    double estimate;
};

// Energies carry no C(alpha)/2 prefactor.
struct EnergyReport {
    double value = 0.0;
    bool divergent = false;
    double l2_norm_sq = 0.0;
    std::vector<TracePoint> trace;

    std::optional<double> e1() const
    {
        if (divergent) return std::nullopt;
        return value + l2_norm_sq;
    }
};

// Three consecutive growth factors >= ratio.  With `trailing`, only the last three count,
// i.e. the estimate is still growing geometrically at the finest resolution.
inline bool ratio_test_fires(const std::vector<TracePoint>& trace, double ratio, bool trailing)
{
    std::vector<double> r;
    for (std::size_t k = 1; k < trace.size(); ++k) {
        const double prev = trace[k - 1].estimate;
        r.push_back(prev > 0 ? trace[k].estimate / prev : 0.0);
    }
    if (r.size() < 3) return false;
    const std::size_t first = trailing ? r.size() - 3 : 0;
    for (std::size_t k = first; k + 2 < r.size(); ++k)
        if (r[k] >= ratio && r[k + 1] >= ratio && r[k + 2] >= ratio) return true;
    return false;
}

inline json to_json(const EnergyReport& r)
{
    json t = json::array();
    for (const auto& p : r.trace) t.push_back({round12(p.resolution), round12(p.estimate)});
    json j;
    j["convention"] = "double integral without the C(alpha)/2 prefactor";
    j["value"] = r.divergent ? json("divergent") : json(round12(r.value));
    j["l2"] = round12(r.l2_norm_sq);
    j["e1"] = r.divergent ? json("divergent") : json(round12(r.value + r.l2_norm_sq));
    j["trace"] = t;
    return j;
}

} // namespace fsl
