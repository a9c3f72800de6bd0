// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fsl/common.hpp"

namespace fsl {

// Samples on a uniform grid x_i = origin + i*step, interpolated piecewise-linearly.
// The interpolant is sum_i v_i * hat_i, so it ramps to zero at the virtual nodes
// x_{-1} and x_N and is always continuous with compact support.
class GridFunction {
public:
    GridFunction() = default;

    GridFunction(double origin, double step, std::vector<double> values)
        : origin_(origin), step_(step), values_(std::move(values))
    {
        require(std::isfinite(origin), "GridFunction: origin must be finite");
        require(step > 0 && std::isfinite(step), "GridFunction: step must be positive");
        for (double v : values_)
            require(std::isfinite(v), "GridFunction: non-finite sample");
        recompute_support();
    }

    template <class F>
    static GridFunction sample(F&& f, double origin, double step, std::size_t n)
    {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = f(origin + static_cast<double>(i) * step);
        return {origin, step, std::move(v)};
    }

    static GridFunction zeros(double origin, double step, std::size_t n)
    {
        return {origin, step, std::vector<double>(n, 0.0)};
    }

    double origin() const { return origin_; }
    double step() const { return step_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double x(std::ptrdiff_t i) const { return origin_ + static_cast<double>(i) * step_; }

    bool is_zero() const { return lo_ > hi_; }
    // Indices of the first/last nonzero sample; meaningless when is_zero().
    std::size_t support_lo() const { return lo_; }
    std::size_t support_hi() const { return hi_; }

    // Closed support of the interpolant, including the ramps to the neighbouring zeros.
    Interval support() const
    {
        if (is_zero()) return {origin_, origin_};
        return {x(static_cast<std::ptrdiff_t>(lo_) - 1), x(static_cast<std::ptrdiff_t>(hi_) + 1)};
    }

    Interval window() const { return {x(-1), x(static_cast<std::ptrdiff_t>(size()))}; }

    double operator()(double t) const
    {
        const double s = (t - origin_) / step_;
        const double fl = std::floor(s);
        const auto i = static_cast<std::ptrdiff_t>(fl);
        const double w = s - fl;
        return (1.0 - w) * at(i) + w * at(i + 1);
    }

    // Value at a possibly out-of-range node index (zero outside).
    double at(std::ptrdiff_t i) const
    {
        if (i < 0 || i >= static_cast<std::ptrdiff_t>(values_.size())) return 0.0;
        return values_[static_cast<std::size_t>(i)];
    }

    double sup_norm() const
    {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    double max_value() const
    {
        double m = 0.0;
        for (double v : values_) m = std::max(m, v);
        return m;
    }

    // Total variation of the interpolant, ramps to the virtual zero nodes included.
    double total_variation() const
    {
        if (is_zero()) return 0.0;
        double tv = std::abs(values_[lo_]) + std::abs(values_[hi_]);
        for (std::size_t i = lo_; i < hi_; ++i) tv += std::abs(values_[i + 1] - values_[i]);
        return tv;
    }

    double lipschitz() const
    {
        double m = 0.0;
        for (std::ptrdiff_t i = -1; i < static_cast<std::ptrdiff_t>(size()); ++i)
            m = std::max(m, std::abs(at(i + 1) - at(i)));
        return m / step_;
    }

    bool same_grid(const GridFunction& o) const
    {
        return origin_ == o.origin_ && step_ == o.step_ && size() == o.size();
    }

    GridFunction with_values(std::vector<double> v) const { return {origin_, step_, std::move(v)}; }

    GridFunction scaled(double c) const
    {
        std::vector<double> v = values_;
        for (double& e : v) e *= c;
        return with_values(std::move(v));
    }

    // Same function sampled on a grid shifted by k whole steps.
    GridFunction translated(std::ptrdiff_t k) const
    {
        return {origin_ + static_cast<double>(k) * step_, step_, values_};
    }

    // Every 2^level-th node, keeping the origin.  The result is a coarser interpolant.
    GridFunction subsampled(unsigned level) const
    {
        const std::size_t stride = std::size_t{1} << level;
        std::vector<double> v;
        for (std::size_t i = 0; i < size(); i += stride) v.push_back(values_[i]);
        return {origin_, step_ * static_cast<double>(stride), std::move(v)};
    }

    friend GridFunction operator+(const GridFunction& a, const GridFunction& b)
    {
        require(a.same_grid(b), "GridFunction: grid mismatch");
        std::vector<double> v = a.values_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
        return a.with_values(std::move(v));
    }

    friend GridFunction operator-(const GridFunction& a, const GridFunction& b)
    {
        require(a.same_grid(b), "GridFunction: grid mismatch");
        std::vector<double> v = a.values_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
        return a.with_values(std::move(v));
    }

private:
    void recompute_support()
    {
        lo_ = values_.size();
        hi_ = 0;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] != 0.0) {
                lo_ = std::min(lo_, i);
                hi_ = i;
            }
        }
        if (lo_ == values_.size()) {
            lo_ = 1;
            hi_ = 0;
        }
    }

    double origin_ = 0.0;
    double step_ = 1.0;
    std::vector<double> values_;
    std::size_t lo_ = 1;
    std::size_t hi_ = 0;
};

} // namespace fsl
