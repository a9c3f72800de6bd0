// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"

namespace fsl {

// Finite union of disjoint open intervals, sorted.  Endpoints may be infinite.
// Adjacent intervals may touch: (0,1) and (1,2) stay separate because 1 is not in the set.
class IntervalSet {
public:
    IntervalSet() = default;

    // Accepts any list of open intervals; overlapping ones are merged.
    explicit IntervalSet(std::vector<Interval> parts)
    {
        for (const auto& p : parts) {
            require(!std::isnan(p.lo) && !std::isnan(p.hi), "IntervalSet: NaN endpoint");
            require(p.lo < p.hi, "IntervalSet: each interval needs lo < hi");
        }
        std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
        for (const auto& p : parts) {
            if (!parts_.empty() && p.lo < parts_.back().hi)
                parts_.back().hi = std::max(parts_.back().hi, p.hi);
            else
                parts_.push_back(p);
        }
    }

    static IntervalSet whole_line() { return IntervalSet({{-inf, inf}}); }

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(double x) const
    {
        auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                                   [](double v, const Interval& p) { return v < p.lo; });
        if (it == parts_.begin()) return false;
        --it;
        return x > it->lo && x < it->hi;
    }

    // Lebesgue measure of the set inside [a, b].
    double measure_within(double a, double b) const
    {
        double m = 0.0;
        for (const auto& p : parts_) {
            const double lo = std::max(a, p.lo), hi = std::min(b, p.hi);
            if (hi > lo) m += hi - lo;
        }
        return m;
    }

    // Sum of the finite interval lengths; infinite intervals contribute nothing.
    double finite_measure() const
    {
        double m = 0.0;
        for (const auto& p : parts_)
            if (std::isfinite(p.lo) && std::isfinite(p.hi)) m += p.hi - p.lo;
        return m;
    }

    IntervalSet intersect(const Interval& w) const
    {
        std::vector<Interval> out;
        for (const auto& p : parts_) {
            const double lo = std::max(w.lo, p.lo), hi = std::min(w.hi, p.hi);
            if (hi > lo) out.push_back({lo, hi});
        }
        IntervalSet r;
        r.parts_ = std::move(out);
        return r;
    }

    // Maximal open intervals of (a,b) not covered by the set (touching points ignored).
    std::vector<Interval> gaps_within(double a, double b) const
    {
        std::vector<Interval> g;
        double cur = a;
        for (const auto& p : parts_) {
            if (p.hi <= cur) continue;
            if (p.lo >= b) break;
            if (p.lo > cur) g.push_back({cur, p.lo});
            cur = std::max(cur, p.hi);
        }
        if (cur < b) g.push_back({cur, b});
        return g;
    }

    IntervalSet united(const IntervalSet& o) const
    {
        std::vector<Interval> all = parts_;
        all.insert(all.end(), o.parts_.begin(), o.parts_.end());
        return IntervalSet(std::move(all));
    }

    friend bool operator==(const IntervalSet& a, const IntervalSet& b)
    {
        if (a.parts_.size() != b.parts_.size()) return false;
        for (std::size_t i = 0; i < a.parts_.size(); ++i)
            if (a.parts_[i].lo != b.parts_[i].lo || a.parts_[i].hi != b.parts_[i].hi) return false;
        return true;
    }

private:
    std::vector<Interval> parts_;
};

} // namespace fsl
