// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/energy/kernel.hpp"
#include "fsl/energy/report.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/polyline.hpp"
#include "fsl/funcrep/step_function.hpp"

namespace fsl {

// \iint kappa(x-y) du(x) dv(y), exact up to rounding.  Infinite when alpha >= 1 and atoms
// coincide.  Distant pieces go through the series in kernel::mean_kappa_far.
inline double bilinear_form(const DerivativeMeasure& u, const DerivativeMeasure& v, double alpha)
{
    using kernel::kappa;
    using kernel::mean_kappa_far;
    using kernel::psi;
    using kernel::psi_prime;
    using kernel::well_separated;
    auto atom_segment = [alpha](const Atom& a, const Segment& g) {
        const double w = g.hi - g.lo, d = a.at - 0.5 * (g.lo + g.hi);
        if (well_separated(d, 0.0, w)) return a.jump * g.slope * w * mean_kappa_far(d, 0.0, w, alpha);
        return a.jump * g.slope * (psi_prime(a.at - g.lo, alpha) - psi_prime(a.at - g.hi, alpha));
    };
    double s = 0.0;
    for (const auto& a : u.atoms)
        for (const auto& b : v.atoms) s += a.jump * b.jump * kappa(a.at - b.at, alpha);
    for (const auto& a : u.atoms)
        for (const auto& g : v.segments) s += atom_segment(a, g);
    for (const auto& g : u.segments)
        for (const auto& b : v.atoms) s += atom_segment(b, g);
    for (const auto& g : u.segments) {
        const double wg = g.hi - g.lo, cg = 0.5 * (g.lo + g.hi);
        for (const auto& k : v.segments) {
            const double wk = k.hi - k.lo, d = cg - 0.5 * (k.lo + k.hi);
            if (well_separated(d, wg, wk))
                s += g.slope * k.slope * wg * wk * mean_kappa_far(d, wg, wk, alpha);
            else
                s += g.slope * k.slope *
                     (psi(g.hi - k.lo, alpha) - psi(g.lo - k.lo, alpha) - psi(g.hi - k.hi, alpha) + psi(g.lo - k.hi, alpha));
        }
    }
    return s;
}

inline EnergyValue measure_energy(const DerivativeMeasure& u, double alpha)
{
    if (alpha >= 1.0 && u.has_atoms()) return EnergyValue::diverges();
    return EnergyValue::finite(std::max(0.0, bilinear_form(u, u, alpha)));
}

// sum_{i,j} f_i g_j q_{|i-j|} over the supports, for two functions on the same grid.
inline double grid_bilinear(const GridFunction& f, const GridFunction& g, double alpha)
{
    require(f.same_grid(g), "grid_bilinear: grid mismatch");
    if (f.is_zero() || g.is_zero()) return 0.0;
    const std::size_t lo = std::min(f.support_lo(), g.support_lo());
    const std::size_t hi = std::max(f.support_hi(), g.support_hi());
    const auto q = kernel::stiffness_stencil(hi - lo + 1, f.step(), alpha);
    double s = 0.0;
    for (std::size_t i = f.support_lo(); i <= f.support_hi(); ++i) {
        if (f[i] == 0.0) continue;
        double row = 0.0;
        for (std::size_t j = g.support_lo(); j <= g.support_hi(); ++j) row += g[j] * q[i > j ? i - j : j - i];
        s += f[i] * row;
    }
    return s;
}

// Exact Gagliardo energy of the piecewise-linear interpolant: q_0 R_0 + 2 sum q_m R_m,
// with R_m the autocorrelation of the samples.
inline double grid_energy(const GridFunction& f, double alpha)
{
    if (f.is_zero()) return 0.0;
    const std::size_t lo = f.support_lo(), n = f.support_hi() - lo + 1;
    const auto q = kernel::stiffness_stencil(n, f.step(), alpha);
    const double* v = f.values().data() + lo;
    double s = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        double r = 0.0;
        for (std::size_t i = 0; i + m < n; ++i) r += v[i] * v[i + m];
        s += (m == 0 ? 1.0 : 2.0) * q[m] * r;
    }
    return std::max(0.0, s);
}

inline double l2_norm_sq(const GridFunction& f)
{
    if (f.is_zero()) return 0.0;
    double r0 = 0.0, r1 = 0.0;
    for (std::size_t i = f.support_lo(); i <= f.support_hi(); ++i) {
        r0 += f[i] * f[i];
        if (i < f.support_hi()) r1 += f[i] * f[i + 1];
    }
    return f.step() * (2.0 * r0 + r1) / 3.0;
}

inline double l2_norm_sq(const StepFunction& f)
{
    double s = 0.0;
    for (std::size_t i = 0; i < f.levels().size(); ++i)
        s += f.levels()[i] * f.levels()[i] * (f.breakpoints()[i + 1] - f.breakpoints()[i]);
    return s;
}

// Resolution study by dyadic subsampling.  The value itself is exact for the interpolant;
// DIVERGENT means it was still growing geometrically at the finest resolution, i.e. the
// samples resolve a jump rather than a continuous function.
inline EnergyReport gagliardo_energy(const GridFunction& f, const EnergyParams& p)
{
    p.validate();
    require(p.alpha < 2.0, "gagliardo_energy: alpha = 2 has no Gagliardo form, use dirichlet_energy");
    EnergyReport r;
    r.l2_norm_sq = l2_norm_sq(f);
    if (f.is_zero()) {
        r.trace.push_back({static_cast<double>(f.size()), 0.0});
        return r;
    }
    const std::size_t count = f.support_hi() - f.support_lo() + 1;
    unsigned levels = 0;
    while (levels < p.max_refinements && (count >> (levels + 1)) >= 16) ++levels;
    for (unsigned l = levels + 1; l-- > 0;) {
        const GridFunction c = l == 0 ? f : f.subsampled(l);
        r.trace.push_back({static_cast<double>(c.size()), grid_energy(c, p.alpha)});
    }
    r.value = r.trace.back().estimate;
    r.divergent = ratio_test_fires(r.trace, p.divergence_ratio, true);
    return r;
}

// Replaces every jump of f by a centered linear ramp of width w.
inline DerivativeMeasure ramped(const StepFunction& f, double w)
{
    DerivativeMeasure m;
    const auto j = f.jumps();
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] == 0.0) continue;
        const double z = f.breakpoints()[i];
        m.segments.push_back({z - 0.5 * w, z + 0.5 * w, j[i] / w});
    }
    return m;
}

// Step functions are sharpened dyadically (ramp width halves each refinement).  For
// alpha < 1 the limit is the exact jump-pair sum; for alpha >= 1 it is infinite and the
// ratio test on the sharpening trace detects it.
inline EnergyReport gagliardo_energy(const StepFunction& f, const EnergyParams& p)
{
    p.validate();
    require(p.alpha < 2.0, "gagliardo_energy: alpha = 2 has no Gagliardo form, use dirichlet_energy");
    EnergyReport r;
    r.l2_norm_sq = l2_norm_sq(f);
    if (f.empty()) {
        r.trace.push_back({0.0, 0.0});
        return r;
    }
    const double w0 = 0.5 * f.min_spacing();
    for (unsigned k = 0; k <= p.max_refinements; ++k) {
        const double w = std::ldexp(w0, -static_cast<int>(k));
        r.trace.push_back({1.0 / w, std::max(0.0, bilinear_form(ramped(f, w), ramped(f, w), p.alpha))});
    }
    r.divergent = ratio_test_fires(r.trace, p.divergence_ratio, false);
    if (p.alpha < 1.0) {
        r.value = measure_energy(derivative(f), p.alpha).value;
    } else {
        r.value = r.trace.back().estimate;
        r.divergent = r.divergent || derivative(f).has_atoms();
    }
    return r;
}

inline EnergyValue indicator_energy_closed_form(double a, double b, double alpha)
{
    require(a < b, "indicator_energy_closed_form: need a < b");
    require(alpha > 0 && alpha < 2, "indicator_energy_closed_form: alpha must lie in (0, 2)");
    if (alpha >= 1.0) return EnergyValue::diverges();
    return EnergyValue::finite(4.0 / (alpha * (1.0 - alpha)) * std::pow(b - a, 1.0 - alpha));
}

// Indicator of [a,b] sampled on grids with b-a = K h, K = 2, 4, ..., K_max, so the ramp
// width h halves at each refinement.  The nodes a and b are 0, which keeps the ramps inside
// [a,b] and makes the estimates increase toward the limit.  The finest grid has 2 K_max + 1
// nodes (a margin of (b-a)/2 on each side); coarser grids are exact subsamples of it.  For
// alpha < 1 the value is Richardson-extrapolated with the known rate (b-a)^{1-alpha} h^{1-alpha}.
inline EnergyReport sharpened_indicator_energy(double a, double b, double alpha, std::size_t nodes = 2048,
                                               double divergence_ratio = 1.15)
{
    require(a < b, "sharpened_indicator_energy: need a < b");
    require(alpha > 0 && alpha < 2, "sharpened_indicator_energy: alpha must lie in (0, 2)");
    require(nodes >= 16, "sharpened_indicator_energy: need at least 16 nodes");
    std::size_t k_max = 2;
    while (4 * k_max <= nodes) k_max *= 2;
    const double h = (b - a) / static_cast<double>(k_max);
    std::vector<double> v(2 * k_max + 1, 0.0);
    for (std::size_t i = k_max / 2 + 1; i < k_max / 2 + k_max; ++i) v[i] = 1.0;
    const GridFunction fine(a - static_cast<double>(k_max / 2) * h, h, std::move(v));

    EnergyReport r;
    r.l2_norm_sq = l2_norm_sq(fine);
    unsigned levels = 0;
    while ((k_max >> (levels + 1)) >= 2) ++levels;
    for (unsigned l = levels + 1; l-- > 0;) {
        const GridFunction c = l == 0 ? fine : fine.subsampled(l);
        r.trace.push_back({static_cast<double>(c.size()), grid_energy(c, alpha)});
    }
    r.divergent = ratio_test_fires(r.trace, divergence_ratio, false);
    const double e1 = r.trace[r.trace.size() - 2].estimate, e2 = r.trace.back().estimate;
    r.value = alpha < 1.0 ? e2 + (e2 - e1) / (std::pow(2.0, 1.0 - alpha) - 1.0) : e2;
    return r;
}

// One half of the integral of f'^2, exact for the interpolant.
inline double dirichlet_energy(const GridFunction& f)
{
    if (f.is_zero()) return 0.0;
    double s = 0.0;
    for (auto i = static_cast<std::ptrdiff_t>(f.support_lo()) - 1; i <= static_cast<std::ptrdiff_t>(f.support_hi()); ++i) {
        const double d = f.at(i + 1) - f.at(i);
        s += d * d;
    }
    return 0.5 * s / f.step();
}

} // namespace fsl
