// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/funcrep/interval_set.hpp"

namespace fsl {

// s(x) = \int_anchor^x 1_G, piecewise linear with slopes 0 and 1.  Stored as the pieces of
// G on each side of the anchor with prefix sums of their lengths, so evaluation is exact
// interval arithmetic plus one binary search.
class ScaleFunction {
public:
    ScaleFunction() = default;

    explicit ScaleFunction(IntervalSet g, double anchor = 0.0, Interval density_window = {-1.0, 1.0},
                           double density_resolution = 1.0 / 64.0)
        : g_(std::move(g)), anchor_(anchor)
    {
        require(std::isfinite(anchor), "ScaleFunction: anchor must be finite");
        for (const auto& p : g_.intervals()) {
            if (p.hi > anchor_) right_.push_back({std::max(p.lo, anchor_), p.hi});
            if (p.lo < anchor_) left_.push_back({p.lo, std::min(p.hi, anchor_)});
        }
        std::reverse(left_.begin(), left_.end());
        right_sum_.assign(right_.size() + 1, 0.0);
        for (std::size_t k = 0; k < right_.size(); ++k) right_sum_[k + 1] = right_sum_[k] + right_[k].length();
        left_sum_.assign(left_.size() + 1, 0.0);
        for (std::size_t k = 0; k < left_.size(); ++k) left_sum_[k + 1] = left_sum_[k] + left_[k].length();

        double widest = 0.0;
        for (const auto& gap : g_.gaps_within(density_window.lo, density_window.hi)) widest = std::max(widest, gap.length());
        max_gap_ = widest;
        strictly_increasing_ = widest <= density_resolution;
    }

    const IntervalSet& g_set() const { return g_; }
    double anchor() const { return anchor_; }
    // Finite-resolution density of G: no gap of G in the density window exceeds the resolution.
    bool strictly_increasing() const { return strictly_increasing_; }
    double max_gap() const { return max_gap_; }

    double operator()(double x) const
    {
        if (x >= anchor_) {
            auto it = std::upper_bound(right_.begin(), right_.end(), x, [](double v, const Interval& p) { return v < p.lo; });
            if (it == right_.begin()) return 0.0;
            const auto k = static_cast<std::size_t>(it - right_.begin()) - 1;
            return right_sum_[k] + (std::min(x, right_[k].hi) - right_[k].lo);
        }
        auto it = std::upper_bound(left_.begin(), left_.end(), x, [](double v, const Interval& p) { return v > p.hi; });
        if (it == left_.begin()) return 0.0;
        const auto k = static_cast<std::size_t>(it - left_.begin()) - 1;
        return -(left_sum_[k] + (left_[k].hi - std::max(x, left_[k].lo)));
    }

    // Some x with s(x) = y, taken inside the closure of a piece of G.
    double preimage(double y) const
    {
        if (y >= 0) {
            auto it = std::lower_bound(right_sum_.begin() + 1, right_sum_.end(), y);
            require(it != right_sum_.end(), "ScaleFunction: value outside the range of s");
            const auto k = static_cast<std::size_t>(it - right_sum_.begin()) - 1;
            return right_[k].lo + (y - right_sum_[k]);
        }
        auto it = std::lower_bound(left_sum_.begin() + 1, left_sum_.end(), -y);
        require(it != left_sum_.end(), "ScaleFunction: value outside the range of s");
        const auto k = static_cast<std::size_t>(it - left_sum_.begin()) - 1;
        return left_[k].hi - (-y - left_sum_[k]);
    }

    // Endpoints of the pieces of G strictly inside (lo, hi): the breakpoints of s there.
    std::vector<double> breakpoints_within(double lo, double hi) const
    {
        std::vector<double> b;
        for (const auto& p : g_.intervals()) {
            if (p.lo > lo && p.lo < hi) b.push_back(p.lo);
            if (p.hi > lo && p.hi < hi) b.push_back(p.hi);
        }
        return b;
    }

private:
    IntervalSet g_;
    double anchor_ = 0.0;
    std::vector<Interval> right_, left_;
    std::vector<double> right_sum_, left_sum_;
    double max_gap_ = 0.0;
    bool strictly_increasing_ = false;
};

inline ScaleFunction scale_from_open_set(const IntervalSet& g, double anchor = 0.0)
{
    return ScaleFunction(g, anchor);
}

struct ScaleAdmissibility {
    bool admissible = false;
    double zero_set_measure = 0.0;
    Interval window;
};

// Slopes are 0 or 1 by construction; the zero set {s' = 0} is the complement of G.
inline ScaleAdmissibility brownian_scale_admissible(const ScaleFunction& s, Interval window = {-1.0, 1.0})
{
    ScaleAdmissibility a;
    a.window = window;
    a.admissible = true;
    a.zero_set_measure = window.length() - s.g_set().measure_within(window.lo, window.hi);
    return a;
}

} // namespace fsl
