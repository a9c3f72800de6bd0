// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/energy/gagliardo.hpp"
#include "fsl/energy/kernel.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/interval_set.hpp"
#include "fsl/funcrep/io.hpp"

namespace fsl {

struct CapacityOptions {
    double tolerance = 1e-10;        // relative residual of the reduced system
    std::size_t max_iterations = 0;  // 0: ten times the number of nodes
};

struct CapacityEstimate {
    double value = 0.0;     // E_1(u, u): Gagliardo energy without prefactor plus squared L2 norm
    GridFunction equilibrium;
    double residual = 0.0;  // final relative residual
    double resolution = 0.0;
    std::size_t iterations = 0;
    double clamp_violation = 0.0;  // largest correction made by the 0 <= u <= 1 clamp
    std::vector<double> residual_trace;
};

namespace detail {

// Nodes whose dual cell [x - h/2, x + h/2] meets the (open) target: an outer approximation.
inline std::vector<char> target_mask(const IntervalSet& target, double origin, double h, std::size_t n)
{
    std::vector<char> mask(n, 0);
    for (const auto& p : target.intervals()) {
        const double a = (p.lo - origin) / h - 0.5, b = (p.hi - origin) / h + 0.5;
        const auto i0 = static_cast<std::ptrdiff_t>(std::max(0.0, std::floor(a) + 1));
        const auto i1 = static_cast<std::ptrdiff_t>(std::min(static_cast<double>(n) - 1, std::ceil(b) - 1));
        for (std::ptrdiff_t i = i0; i <= i1; ++i) mask[static_cast<std::size_t>(i)] = 1;
    }
    return mask;
}

// y = A x for the symmetric Toeplitz matrix with first row t.
inline void toeplitz_apply(const std::vector<double>& t, const std::vector<double>& x, std::vector<double>& y)
{
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < i; ++j) s += t[i - j] * x[j];
        for (std::size_t j = i; j < n; ++j) s += t[j - i] * x[j];
        y[i] = s;
    }
}

} // namespace detail

// Minimizes E_1(u,u) over u on the grid of `domain` (zero at its ends) with u = 1 on the
// nodes meeting the target.  The reduced system on the free nodes is solved by conjugate
// gradients with the same closed-form stencil the energy module uses.
inline CapacityEstimate capacity_estimate(const IntervalSet& target, double alpha_star, Interval domain, double step,
                                          CapacityOptions opt = {})
{
    require(alpha_star > 0 && alpha_star <= 1, "capacity_estimate: alpha_star must lie in (0, 1]");
    require(step > 0 && domain.lo < domain.hi, "capacity_estimate: need a positive step and non-empty domain");
    for (const auto& p : target.intervals())
        require(p.lo >= domain.lo && p.hi <= domain.hi, "capacity_estimate: target must lie inside the domain");
    const auto cells = static_cast<std::size_t>(std::floor(domain.length() / step + 1e-9));
    require(cells >= 3, "capacity_estimate: domain holds fewer than 3 cells");
    const std::size_t n = cells - 1;
    const double origin = domain.lo + step;

    CapacityEstimate out;
    out.resolution = step;
    out.equilibrium = GridFunction::zeros(origin, step, n);
    if (target.empty()) return out;

    auto t = kernel::stiffness_stencil(n, step, alpha_star);
    t[0] += 2.0 * step / 3.0;
    if (n > 1) t[1] += step / 6.0;
    const auto fixed = detail::target_mask(target, origin, step, n);

    std::vector<double> u(n, 0.0), b(n), r(n), p(n), ap(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = fixed[i] ? 1.0 : 0.0;
    detail::toeplitz_apply(t, u, b);
    for (std::size_t i = 0; i < n; ++i) b[i] = fixed[i] ? 0.0 : -b[i];

    auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    const double bnorm = std::sqrt(dot(b, b));
    std::vector<double> x(n, 0.0);
    r = b;
    p = r;
    double rr = dot(r, r);
    const std::size_t max_it = opt.max_iterations ? opt.max_iterations : 10 * n;
    out.residual = bnorm > 0 ? std::sqrt(rr) / bnorm : 0.0;
    out.residual_trace.push_back(out.residual);
    while (out.residual > opt.tolerance && out.iterations < max_it) {
        detail::toeplitz_apply(t, p, ap);
        for (std::size_t i = 0; i < n; ++i)
            if (fixed[i]) ap[i] = 0.0;
        const double alpha = rr / dot(p, ap);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rr_new = dot(r, r);
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + (rr_new / rr) * p[i];
        rr = rr_new;
        ++out.iterations;
        out.residual = std::sqrt(rr) / bnorm;
        out.residual_trace.push_back(out.residual);
    }
    if (out.residual > opt.tolerance) {
        std::string trace;
        for (std::size_t k = 0; k < out.residual_trace.size(); k += std::max<std::size_t>(1, out.residual_trace.size() / 8))
            trace += " " + fmt12(out.residual_trace[k]);
        throw solver_error("capacity_estimate: conjugate gradients stalled at residual " + fmt12(out.residual) + " after " +
                           std::to_string(out.iterations) + " iterations; trace:" + trace);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (fixed[i]) continue;
        const double clamped = std::clamp(x[i], 0.0, 1.0);
        out.clamp_violation = std::max(out.clamp_violation, std::abs(clamped - x[i]));
        u[i] = clamped;
    }
    out.equilibrium = GridFunction(origin, step, u);
    out.value = grid_energy(out.equilibrium, alpha_star) + l2_norm_sq(out.equilibrium);
    return out;
}

inline Interval default_capacity_domain(const IntervalSet& target, double factor = 8.0)
{
    require(!target.empty(), "default_capacity_domain: empty target");
    const double lo = target.intervals().front().lo, hi = target.intervals().back().hi;
    require(std::isfinite(lo) && std::isfinite(hi), "default_capacity_domain: target must be bounded");
    const double c = 0.5 * (lo + hi), d = hi - lo;
    return {c - factor * d, c + factor * d};
}

// Relative change of the capacity when the domain is doubled about its center.
inline double capacity_window_drift(const IntervalSet& target, double alpha_star, Interval domain, double step)
{
    const double c = 0.5 * (domain.lo + domain.hi), half = domain.length();
    const double a = capacity_estimate(target, alpha_star, domain, step).value;
    const double b = capacity_estimate(target, alpha_star, {c - half, c + half}, step).value;
    return std::abs(b - a) / b;
}

inline json to_json(const CapacityEstimate& c)
{
    return {{"value", round12(c.value)},
            {"residual", round12(c.residual)},
            {"resolution", round12(c.resolution)},
            {"iterations", c.iterations},
            {"clamp_violation", round12(c.clamp_violation)},
            {"equilibrium", to_json(c.equilibrium)}};
}

} // namespace fsl
