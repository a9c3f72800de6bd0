// SPDX-License-Identifier: MIT
#pragma once

// Closed-form antiderivatives of the Gagliardo kernel |t|^{-1-alpha}.
//
// For functions whose derivative is a measure du, integrating by parts twice gives
//     \iint (u(x)-u(y))(v(x)-v(y)) |x-y|^{-1-alpha} dx dy = \iint kappa(x-y) du(x) dv(y)
// with kappa'' = 2|t|^{-1-alpha}.  Writing eps = 1 - alpha and
//     Eh(t) = (|t|^eps - 1) / eps        (-> ln|t| as eps -> 0)
// we use
//     kappa(t) = -(2/alpha) (Eh(t) + (3+eps)/((1+eps)(2+eps)))
//     psi'(t)  = -(2/alpha) t ((2+eps) Eh(t) + 1) / ((1+eps)(2+eps))
//     psi(t)   = -(2/alpha) t^2 Eh(t) / ((1+eps)(2+eps))
// so that psi'' = kappa.  expm1 keeps alpha = 1 and its neighbourhood stable.
// Only second differences of kappa enter, so the affine part is irrelevant.

#include <cmath>
#include <cstddef>
#include <vector>

#include "fsl/common.hpp"

namespace fsl::kernel {

inline double eh(double t, double eps)
{
    const double l = std::log(std::abs(t));
    if (eps == 0.0) return l;
    return std::expm1(eps * l) / eps;
}

// kappa(0) is finite for alpha < 1 and +inf otherwise: jumps carry infinite energy iff alpha >= 1.
inline double kappa(double t, double alpha)
{
    const double eps = 1.0 - alpha;
    return -(2.0 / alpha) * (eh(t, eps) + (3.0 + eps) / ((1.0 + eps) * (2.0 + eps)));
}

inline double psi_prime(double t, double alpha)
{
    if (t == 0.0) return 0.0;
    const double eps = 1.0 - alpha;
    return -(2.0 / alpha) * t * ((2.0 + eps) * eh(t, eps) + 1.0) / ((1.0 + eps) * (2.0 + eps));
}

inline double psi(double t, double alpha)
{
    if (t == 0.0) return 0.0;
    const double eps = 1.0 - alpha;
    return -(2.0 / alpha) * t * t * eh(t, eps) / ((1.0 + eps) * (2.0 + eps));
}

// Average of kappa(d + s - t) over s uniform on [-a/2, a/2] and t uniform on [-b/2, b/2]
// (a or b may be 0 for a point), for well separated cells |d| >= 4 (a + b).  The closed
// forms are differences of psi whose cancellation grows like (d/a)^2; here the even
// Taylor series of kappa around d is summed instead, with
//     kappa^(2k)(d) = 2 (1+alpha)_(2k-2) |d|^{1-alpha-2k},
// whose successive terms shrink by at least 64.
inline double mean_kappa_far(double d, double a, double b, double alpha)
{
    const double ad = std::abs(d);
    double m = kappa(ad, alpha);
    double deriv = 2.0 * std::pow(ad, -1.0 - alpha);  // kappa''(d)
    const double inv2 = 1.0 / (ad * ad);
    const double ha = 0.5 * a, hb = 0.5 * b;
    double fact = 2.0;  // (2k)!
    for (int k = 1; k <= 8; ++k) {
        // E[(s - t)^{2k}] from the even moments (h^{2j} / (2j+1)) of each uniform.
        double moment = 0.0, binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            moment += binom * std::pow(ha, 2 * j) / (2 * j + 1) * std::pow(hb, 2 * (k - j)) / (2 * (k - j) + 1);
            binom *= static_cast<double>((2 * k - 2 * j) * (2 * k - 2 * j - 1)) / ((2 * j + 1) * (2 * j + 2));
        }
        m += deriv * moment / fact;
        deriv *= (2 * k - 1 + alpha) * (2 * k + alpha) * inv2;
        fact *= (2 * k + 1) * (2 * k + 2);
    }
    return m;
}

inline bool well_separated(double d, double a, double b) { return std::abs(d) >= 4.0 * (a + b); }

// Energy matrix of the hat basis on a uniform grid: q_m = <hat_0, hat_m> = -delta^4 psi(m h) / h^2.
// Computed at h = 1 and rescaled by h^{1-alpha}.  The fourth difference loses about m^{3.5}
// ulps to cancellation, so near entries are taken in long double and entries from m = 8 on
// use the expansion delta^4 = D^4 sum_j c_j D^{2j}, c_j from (2 sinh(x/2))^4 / x^4, with
//     psi^(4+2j)(m) = 2 (1+alpha)_(2j) m^{-1-alpha-2j};
// at m = 8 the 13th term is below 1e-16 relative.
inline std::vector<double> stiffness_stencil(std::size_t n, double step, double alpha)
{
    static constexpr double c[] = {1.0,
                                   1.0 / 6.0,
                                   1.0 / 80.0,
                                   17.0 / 30240.0,
                                   31.0 / 1814400.0,
                                   1.0 / 2661120.0,
                                   5461.0 / 871782912000.0,
                                   257.0 / 3138418483200.0,
                                   73.0 / 84687482880000.0,
                                   1271.0 / 170303140572364800.0,
                                   60787.0 / 1124000727777607680000.0,
                                   241.0 / 724146127139635200000.0,
                                   22369621.0 / 12703681025488077520896000000.0};
    const long double a = alpha, eps = 1.0L - a;
    auto p = [&](long double t) -> long double {
        if (t == 0.0L) return 0.0L;
        const long double l = std::log(std::abs(t));
        const long double e = eps == 0.0L ? l : std::expm1(eps * l) / eps;
        return -(2.0L / a) * t * t * e / ((1.0L + eps) * (2.0L + eps));
    };
    std::vector<double> q(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        const double x = static_cast<double>(m);
        if (m < 8) {
            const long double t = static_cast<long double>(m);
            q[m] = static_cast<double>(-(p(t + 2) - 4 * p(t + 1) + 6 * p(t) - 4 * p(t - 1) + p(t - 2)));
        } else {
            const double r = 1.0 / (x * x);
            double sum = 0.0, poch = 1.0, rk = 1.0;
            for (int j = 0; j < 13; ++j) {
                sum += c[j] * poch * rk;
                poch *= (2 * j + 1 + alpha) * (2 * j + 2 + alpha);
                rk *= r;
            }
            q[m] = -2.0 * std::pow(x, -1.0 - alpha) * sum;
        }
    }
    const double scale = std::pow(step, 1.0 - alpha);
    for (double& v : q) v *= scale;
    return q;
}

} // namespace fsl::kernel
