// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/interval_set.hpp"
#include "fsl/funcrep/io.hpp"

namespace fsl {

// G = [-1,1]^c united with the intervals (x_i - r_i, x_i + r_i), x_i dense in (-1,1), r_i
// small enough that the capacity surrogate sum of r_i^{alpha-1} (1/log(a/r_i) at alpha=1)
// stays below the budget.
struct FatCantorSpec {
    enum class Radii { geometric, explicit_list };

    double alpha = 1.5;
    double budget = 0.1;
    Radii radii_rule = Radii::geometric;
    double epsilon = 0.0;           // geometric rule: i-th surrogate term is epsilon 2^{-i}; 0 means budget
    std::vector<double> radii;      // explicit rule
    std::vector<double> centers;    // empty: dyadic rationals p/2^q by increasing q, then p
    double log_scale = 2.0;         // the a in 1/log(a/r), alpha = 1 only

    void validate() const
    {
        require(alpha >= 1 && alpha < 2, "FatCantorSpec: alpha must lie in [1, 2)");
        require(budget > 0, "FatCantorSpec: budget must be positive");
        require(epsilon >= 0, "FatCantorSpec: epsilon must be non-negative");
        require(log_scale > 1, "FatCantorSpec: log_scale must exceed 1");
    }

    double surrogate(double r) const
    {
        if (alpha == 1.0) return 1.0 / std::log(log_scale / r);
        return std::pow(r, alpha - 1.0);
    }

    // Radius whose surrogate equals the geometric term epsilon 2^{-i}.
    double geometric_radius(std::size_t i) const
    {
        const double eps = epsilon > 0 ? epsilon : budget;
        const double term = std::ldexp(eps, -static_cast<int>(i));
        if (alpha == 1.0) return log_scale * std::exp(-1.0 / term);
        return std::pow(term, 1.0 / (alpha - 1.0));
    }
};

// Dyadic rationals in (-1, 1): 0, -1/2, 1/2, -3/4, -1/4, 1/4, 3/4, ...
inline std::vector<double> dyadic_centers(std::size_t n)
{
    std::vector<double> c;
    if (n == 0) return c;
    c.push_back(0.0);
    for (int q = 1; c.size() < n; ++q) {
        const long long den = 1LL << q;
        for (long long p = -(den - 1); p < den && c.size() < n; p += 2) c.push_back(static_cast<double>(p) / static_cast<double>(den));
    }
    return c;
}

struct FatCantor {
    IntervalSet g_set;
    std::vector<double> centers;
    std::vector<double> radii;
    double surrogate_sum = 0.0;
    int dense_depth = -1;  // every dyadic subinterval of (-1,1) of length 2^{-depth} meets G
};

inline int dyadic_density_depth(const IntervalSet& g, int max_depth = 20)
{
    int depth = -1;
    for (int d = 0; d <= max_depth; ++d) {
        const double w = std::ldexp(1.0, -d);
        bool all = true;
        for (double lo = -1.0; lo < 1.0 && all; lo += w) all = g.measure_within(lo, lo + w) > 0;
        if (!all) break;
        depth = d;
    }
    return depth;
}

inline FatCantor build_fat_cantor(const FatCantorSpec& spec, std::size_t n_intervals)
{
    spec.validate();
    require(n_intervals >= 1, "build_fat_cantor: need at least one interval");
    FatCantor out;
    out.centers = spec.centers.empty() ? dyadic_centers(n_intervals) : spec.centers;
    require(out.centers.size() >= n_intervals, "build_fat_cantor: not enough centers for n_intervals");
    out.centers.resize(n_intervals);
    if (spec.radii_rule == FatCantorSpec::Radii::explicit_list)
        require(spec.radii.size() >= n_intervals, "build_fat_cantor: not enough explicit radii");

    std::vector<Interval> parts{{-inf, -1.0}, {1.0, inf}};
    for (std::size_t i = 0; i < n_intervals; ++i) {
        const double r = spec.radii_rule == FatCantorSpec::Radii::geometric ? spec.geometric_radius(i + 1) : spec.radii[i];
        const double x = out.centers[i];
        require(r > 0, "build_fat_cantor: radii must be positive");
        require(x - r < x + r, "build_fat_cantor: radius " + fmt12(r) + " of interval " + std::to_string(i + 1) +
                                   " vanishes next to its center in double precision");
        require(x - r > -1.0 && x + r < 1.0, "build_fat_cantor: interval " + std::to_string(i + 1) + " leaves (-1, 1)");
        out.surrogate_sum += spec.surrogate(r);
        if (out.surrogate_sum > spec.budget)
            throw precondition_error("build_fat_cantor: radii exceed the budget, partial sum " + fmt12(out.surrogate_sum) +
                                     " after " + std::to_string(i + 1) + " intervals");
        out.radii.push_back(r);
        parts.push_back({x - r, x + r});
    }
    out.g_set = IntervalSet(std::move(parts));
    out.dense_depth = dyadic_density_depth(out.g_set);
    return out;
}

inline FatCantorSpec fat_cantor_spec_from_json(const json& j)
{
    FatCantorSpec s;
    s.alpha = j.at("alpha").get<double>();
    s.budget = j.at("budget").get<double>();
    if (j.contains("log_scale")) s.log_scale = j.at("log_scale").get<double>();
    if (j.contains("radii")) {
        const auto& r = j.at("radii");
        const auto rule = r.at("rule").get<std::string>();
        if (rule == "geometric") {
            s.radii_rule = FatCantorSpec::Radii::geometric;
            if (r.contains("epsilon")) s.epsilon = r.at("epsilon").get<double>();
        } else if (rule == "explicit") {
            s.radii_rule = FatCantorSpec::Radii::explicit_list;
            s.radii = r.at("values").get<std::vector<double>>();
        } else {
            throw precondition_error("FatCantorSpec: unknown radii rule '" + rule + "'");
        }
    }
    if (j.contains("centers") && j.at("centers").is_array()) s.centers = j.at("centers").get<std::vector<double>>();
    s.validate();
    return s;
}

} // namespace fsl
