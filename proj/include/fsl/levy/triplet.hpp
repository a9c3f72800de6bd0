// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/io.hpp"

namespace fsl {

// nu(dx) = scale |x|^{-1-alpha} dx on both half-lines.
struct PowerDensity {
    double alpha = 0.5;
    double scale = 1.0;
};

// Symmetric Levy triplet.  Atoms are stored for x > 0 only; each stands for mass m at +x and at -x.
struct LevyTriplet {
    double sigma = 0.0;
    std::vector<std::pair<double, double>> atoms;  // (x, m)
    std::optional<PowerDensity> density;

    void validate() const
    {
        require(sigma >= 0 && std::isfinite(sigma), "LevyTriplet: sigma must be finite and non-negative");
        for (const auto& [x, m] : atoms) {
            require(x > 0 && std::isfinite(x), "LevyTriplet: atom locations must be positive (mirrored automatically)");
            require(m >= 0 && std::isfinite(m), "LevyTriplet: atom masses must be finite and non-negative");
        }
        if (density) {
            // \int (1 ^ x^2) x^{-1-alpha} dx < inf exactly when 0 < alpha < 2.
            require(density->alpha > 0 && density->alpha < 2, "LevyTriplet: power density needs alpha in (0, 2)");
            require(density->scale >= 0 && std::isfinite(density->scale), "LevyTriplet: density scale must be non-negative");
        }
    }

    static LevyTriplet gaussian(double sigma) { return {sigma, {}, std::nullopt}; }
    static LevyTriplet stable(double alpha) { return {0.0, {}, PowerDensity{alpha, 1.0}}; }
};

inline json to_json(const LevyTriplet& t)
{
    json atoms = json::array();
    for (const auto& [x, m] : t.atoms) atoms.push_back({round12(x), round12(m)});
    json j{{"sigma", round12(t.sigma)}, {"atoms", atoms}};
    if (t.density)
        j["density"] = {{"type", "power"}, {"alpha", round12(t.density->alpha)}, {"scale", round12(t.density->scale)}};
    else
        j["density"] = nullptr;
    return j;
}

inline LevyTriplet levy_triplet_from_json(const json& j)
{
    LevyTriplet t;
    t.sigma = j.value("sigma", 0.0);
    if (j.contains("atoms"))
        for (const auto& a : j.at("atoms")) {
            require(a.is_array() && a.size() == 2, "LevyTriplet JSON: atoms must be [x, m] pairs");
            t.atoms.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
    if (j.contains("density") && !j.at("density").is_null()) {
        const auto& d = j.at("density");
        const auto type = d.at("type").get<std::string>();
        require(type == "power", "LevyTriplet JSON: only the \"power\" density rule is supported");
        t.density = PowerDensity{d.at("alpha").get<double>(), d.value("scale", 1.0)};
    }
    t.validate();
    return t;
}

} // namespace fsl
