// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fsl/common.hpp"
#include "fsl/energy/gagliardo.hpp"
#include "fsl/energy/report.hpp"
#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/plateau.hpp"
#include "fsl/funcrep/transforms.hpp"
#include "fsl/ladder/experiments.hpp"
#include "fsl/levy/symbol.hpp"
#include "fsl/levy/triplet.hpp"

namespace fsl {

// All Levy energies here are \iint (f(x)-f(y))^2 nu(dx-y) dy, without the 1/2.

// 2 \int ((b-a) ^ |x|) nu(dx), in closed form; divergent iff the triplet is not of finite variation.
inline EnergyValue levy_indicator_energy(double a, double b, const LevyTriplet& t)
{
    require(a < b, "levy_indicator_energy: need a < b");
    if (!finite_variation_test(t).finite) return EnergyValue::diverges();
    const double L = b - a;
    double s = 0.0;
    for (const auto& [x, m] : t.atoms) s += 4.0 * m * std::min(L, x);
    if (t.density && t.density->scale > 0) {
        const double be = t.density->alpha;
        s += 4.0 * t.density->scale * std::pow(L, 1.0 - be) / (be * (1.0 - be));
    }
    return EnergyValue::finite(s);
}

namespace detail {

// Centered cubic B-spline; h B3(t/h) is the autocorrelation of a hat of half-width h.
inline double bspline3(double u)
{
    u = std::abs(u);
    if (u >= 2.0) return 0.0;
    if (u >= 1.0) return (2.0 - u) * (2.0 - u) * (2.0 - u) / 6.0;
    return 2.0 / 3.0 - u * u + 0.5 * u * u * u;
}

} // namespace detail

// D(z) = \int (f(y+z) - f(y))^2 dy for the interpolant, exactly, via the sample autocorrelation.
class ShiftDifference {
public:
    explicit ShiftDifference(const GridFunction& f) : h_(f.step())
    {
        if (f.is_zero()) return;
        const std::size_t lo = f.support_lo(), n = f.support_hi() - lo + 1;
        r_.assign(n, 0.0);
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t i = 0; i + m < n; ++i) r_[m] += f[lo + i] * f[lo + i + m];
    }

    double autocorrelation(double t) const
    {
        const double s = std::abs(t) / h_;
        const auto m0 = static_cast<std::ptrdiff_t>(std::floor(s)) - 2;
        double a = 0.0;
        for (std::ptrdiff_t m = std::max<std::ptrdiff_t>(m0, -static_cast<std::ptrdiff_t>(r_.size()) + 1); m <= m0 + 4; ++m) {
            const auto k = static_cast<std::size_t>(std::abs(m));
            if (k < r_.size()) a += r_[k] * detail::bspline3(s - static_cast<double>(m));
        }
        return h_ * a;
    }

    double operator()(double z) const { return 2.0 * (autocorrelation(0.0) - autocorrelation(z)); }

private:
    double h_;
    std::vector<double> r_;
};

inline EnergyReport levy_gagliardo_energy(const GridFunction& f, const LevyTriplet& t, const EnergyParams& base = {})
{
    t.validate();
    require(t.sigma == 0.0, "levy_gagliardo_energy: sigma must be 0 (the Gaussian part is a local form)");
    EnergyReport r;
    r.l2_norm_sq = l2_norm_sq(f);
    double atom_part = 0.0;
    if (!t.atoms.empty()) {
        const ShiftDifference d(f);
        for (const auto& [x, m] : t.atoms) atom_part += 2.0 * m * d(x);
    }
    if (t.density && t.density->scale > 0) {
        EnergyParams p = base;
        p.alpha = t.density->alpha;
        const auto g = gagliardo_energy(f, p);
        r.divergent = g.divergent;
        for (const auto& tp : g.trace) r.trace.push_back({tp.resolution, atom_part + t.density->scale * tp.estimate});
        r.value = atom_part + t.density->scale * g.value;
    } else {
        r.value = atom_part;
        r.trace.push_back({static_cast<double>(f.size()), atom_part});
    }
    return r;
}

// \int |f^(xi)|^2 psi(xi) d xi over [-xi_max, xi_max] by the trapezoidal rule.  Equals half
// of levy_gagliardo_energy when the tail beyond xi_max is negligible.
inline double levy_fourier_energy(const GridFunction& f, const LevyTriplet& t, double xi_max, std::size_t n_freq)
{
    const auto s = discrete_fourier(f, xi_max, n_freq);
    double e = 0.0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        const double a = std::norm(s[k].value) * levy_psi(t, s[k].xi);
        const double b = std::norm(s[k + 1].value) * levy_psi(t, s[k + 1].xi);
        e += 0.5 * (a + b) * (s[k + 1].xi - s[k].xi);
    }
    return e;
}

struct PlateauBound {
    double energy = 0.0;
    double bound = 0.0;
    bool holds = false;
};

// Energy of a sampled plateau against 16 \int (1 ^ |x|) nu(dx), which does not depend on rho.
inline PlateauBound plateau_energy_bound_check(const PlateauSpec& spec, const LevyTriplet& t, double step = 0.0)
{
    const auto fv = finite_variation_test(t);
    require(fv.finite, "plateau_energy_bound_check: triplet is not of finite variation");
    const auto f = make_plateau(spec, step > 0 ? step : spec.rho / 8.0);
    PlateauBound out;
    out.energy = levy_gagliardo_energy(f, t).value;
    out.bound = 16.0 * fv.value;
    out.holds = out.energy <= out.bound;
    return out;
}

struct GrowthFit {
    double alpha_hat = 0.0;
    double c_hat = 0.0;
    double r_squared = 0.0;
    bool reliable = false;  // a clean power law: r^2 >= 0.99
};

// Least squares of log psi against log |xi| over |xi| >= xi_min.
inline GrowthFit growth_exponent_fit(const SymbolCurve& c, double xi_min)
{
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < c.xi.size(); ++k) {
        if (std::abs(c.xi[k]) < xi_min) continue;
        require(c.psi[k] > 0, "growth_exponent_fit: non-positive psi at xi=" + fmt12(c.xi[k]));
        lx.push_back(std::log(std::abs(c.xi[k])));
        ly.push_back(std::log(c.psi[k]));
    }
    require(lx.size() >= 10, "growth_exponent_fit: need at least 10 points with |xi| >= xi_min");
    GrowthFit g;
    g.alpha_hat = least_squares_slope(lx, ly);
    const double n = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < lx.size(); ++k) {
        mx += lx[k] / n;
        my += ly[k] / n;
    }
    const double intercept = my - g.alpha_hat * mx;
    g.c_hat = std::exp(intercept);
    double ss_res = 0, ss_tot = 0;
    for (std::size_t k = 0; k < lx.size(); ++k) {
        const double e = ly[k] - (intercept + g.alpha_hat * lx[k]);
        ss_res += e * e;
        ss_tot += (ly[k] - my) * (ly[k] - my);
    }
    g.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
    g.reliable = g.r_squared >= 0.99;
    return g;
}

} // namespace fsl
