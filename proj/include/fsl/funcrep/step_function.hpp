// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"

namespace fsl {

// Value levels[i] on (breakpoints[i], breakpoints[i+1]], zero outside the span.
class StepFunction {
public:
    StepFunction() = default;

    StepFunction(std::vector<double> breakpoints, std::vector<double> levels)
        : breaks_(std::move(breakpoints)), levels_(std::move(levels))
    {
        if (breaks_.empty()) {
            require(levels_.empty(), "StepFunction: levels without breakpoints");
            return;
        }
        require(levels_.size() + 1 == breaks_.size(), "StepFunction: need K levels for K+1 breakpoints");
        for (std::size_t i = 0; i < breaks_.size(); ++i) {
            require(std::isfinite(breaks_[i]), "StepFunction: non-finite breakpoint");
            if (i > 0) require(breaks_[i - 1] < breaks_[i], "StepFunction: breakpoints must increase strictly");
        }
        for (double c : levels_) require(std::isfinite(c), "StepFunction: non-finite level");
    }

    static StepFunction indicator(double a, double b) { return {{a, b}, {1.0}}; }

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& levels() const { return levels_; }
    bool empty() const { return levels_.empty(); }

    double operator()(double x) const
    {
        if (empty() || x <= breaks_.front() || x > breaks_.back()) return 0.0;
        const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
        return levels_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
    }

    // Signed jumps of the function at each breakpoint (left to right).
    std::vector<double> jumps() const
    {
        std::vector<double> j(breaks_.size(), 0.0);
        for (std::size_t i = 0; i < breaks_.size(); ++i) {
            const double left = i == 0 ? 0.0 : levels_[i - 1];
            const double right = i < levels_.size() ? levels_[i] : 0.0;
            j[i] = right - left;
        }
        return j;
    }

    double min_spacing() const
    {
        double m = inf;
        for (std::size_t i = 1; i < breaks_.size(); ++i) m = std::min(m, breaks_[i] - breaks_[i - 1]);
        return m;
    }

private:
    std::vector<double> breaks_;
    std::vector<double> levels_;
};

} // namespace fsl
