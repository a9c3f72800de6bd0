// SPDX-License-Identifier: MIT
#pragma once

// Seeded random test functions shared by the verification suite and the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fsl/funcrep/grid_function.hpp"
#include "fsl/funcrep/interval_set.hpp"
#include "fsl/funcrep/plateau.hpp"
#include "fsl/ladder/decompose.hpp"

namespace fsl {

// The one generator used by every randomized sweep.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Smooth bump exp(1 - 1/(1 - t^2)) on |t| < 1, height 1 at t = 0.
inline double smooth_bump(double t)
{
    return std::abs(t) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0;
}

// Grid covering [lo, hi] with the given step; the end nodes sit at lo and hi.
template <class F>
GridFunction sample_on(F&& f, double lo, double hi, double step)
{
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9)) + 1;
    return GridFunction::sample(std::forward<F>(f), lo, step, n);
}

// height * bump((x - center) / half_width), sampled on [lo, hi].
inline GridFunction bump_function(double center, double half_width, double height, double lo, double hi, double step)
{
    return sample_on([=](double x) { return height * smooth_bump((x - center) / half_width); }, lo, hi, step);
}

// One random bump with support inside (lo, hi).
inline GridFunction random_bump(Rng& rng, double lo, double hi, double step)
{
    const double len = hi - lo;
    const double w = uniform(rng, 0.1, 0.4) * len;
    const double c = uniform(rng, lo + w + 0.02 * len, hi - w - 0.02 * len);
    const double height = uniform(rng, 0.5, 2.0);
    return bump_function(c, w, height, lo, hi, step);
}

// Sum of 2 to 4 random bumps on [lo, hi].
inline GridFunction random_multibump(Rng& rng, double lo, double hi, double step)
{
    const int k = uniform_int(rng, 2, 4);
    const double len = hi - lo;
    struct B {
        double c, w, h;
    };
    std::vector<B> bs;
    for (int i = 0; i < k; ++i) {
        const double w = uniform(rng, 0.05, 0.2) * len;
        bs.push_back({uniform(rng, lo + w + 0.01 * len, hi - w - 0.01 * len), w, uniform(rng, 0.3, 1.5)});
    }
    return sample_on(
        [&](double x) {
            double s = 0.0;
            for (const auto& b : bs) s += b.h * smooth_bump((x - b.c) / b.w);
            return s;
        },
        lo, hi, step);
}

// Erased functions of g built four ways: truncation min(g, c), the ladder star, a partial
// ladder sum, and g itself.  `kind` and `level` come from the caller so the same erasure
// can be replayed on a refined grid.
inline GridFunction erase(const GridFunction& g, int kind, double level)
{
    switch (kind) {
    case 0: {
        const double c = level * g.max_value();
        std::vector<double> v = g.values();
        for (double& e : v) e = std::min(e, c);
        return g.with_values(std::move(v));
    }
    case 1: return ladder_star(g).star;
    case 2: {
        const auto tree = ladder_decompose(g, 1 + static_cast<std::size_t>(level * 2), 0.0);
        return tree.partial_sum(tree.node_count());
    }
    default: return g;
    }
}

inline PlateauSpec random_plateau_spec(Rng& rng)
{
    PlateauSpec s;
    s.a = uniform(rng, -1.0, 0.0);
    s.b = s.a + uniform(rng, 0.1, 2.0);
    s.rho = uniform(rng, 0.02, 0.5);
    s.profile = static_cast<RampProfile>(uniform_int(rng, 0, 2));
    return s;
}

// Four overlapping smooth bumps of different heights on [-2, 2]; the excursion tree
// branches at each saddle.
inline GridFunction four_bump_function(double step)
{
    return sample_on(
        [](double x) {
            return smooth_bump((x + 1.2) / 0.5) + 0.7 * smooth_bump((x + 0.3) / 0.4) + 1.2 * smooth_bump((x - 0.5) / 0.45) +
                   0.5 * smooth_bump((x - 1.3) / 0.4);
        },
        -2.0, 2.0, step);
}

} // namespace fsl
