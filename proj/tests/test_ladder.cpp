// SPDX-License-Identifier: MIT
#include "catch_amalgamated.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fsl/cli/families.hpp"
#include "fsl/energy.hpp"
#include "fsl/funcrep.hpp"
#include "fsl/ladder.hpp"
#include "oracles.hpp"

using namespace fsl;
using Catch::Approx;

namespace {

// 0, 1, 0.4, 1, 0 at x = 0..4, padded by a zero node on each side.
GridFunction two_peaks()
{
    return GridFunction(-1.0, 1.0, {0.0, 0.0, 1.0, 0.4, 1.0, 0.0, 0.0});
}

bool nondecreasing(const GridFunction& f)
{
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] < f[i - 1]) return false;
    return true;
}

// Plateau on [a,b] whose ramp nodes are replaced by random values in [0,1].
GridFunction rough_plateau(Rng& rng, const PlateauSpec& spec, double step)
{
    auto f = make_plateau(spec, step);
    auto v = f.values();
    for (auto& x : v)
        if (x > 0.0 && x < 1.0) x = uniform(rng, 0.0, 1.0);
    return f.with_values(v);
}

} // namespace

TEST_CASE("erased-function scanner", "[ladder]")
{
    Rng rng(3);
    const auto g = random_multibump(rng, -1.0, 1.0, 1.0 / 32.0);
    const auto self = is_erased_function(g, g);
    CHECK(self.erased);
    CHECK(self.witness.empty());

    const auto zero = GridFunction::zeros(g.origin(), g.step(), g.size());
    const auto z = is_erased_function(zero, g);
    CHECK(z.erased);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(z.witness.contains(g.x(static_cast<std::ptrdiff_t>(i))) == (g[i] > 0.0));

    // Second bump flattened to zero: one component, the second bump's support.
    const GridFunction two(0.0, 1.0, {0, 1, 0, 2, 3, 1, 0});
    const GridFunction first_only(0.0, 1.0, {0, 1, 0, 0, 0, 0, 0});
    const auto w = is_erased_function(first_only, two);
    CHECK(w.erased);
    REQUIRE(w.witness.intervals().size() == 1);
    CHECK(w.witness.intervals()[0].lo == 2.0);
    CHECK(w.witness.intervals()[0].hi == 6.0);

    CHECK_FALSE(is_erased_function(two.scaled(0.5), two).erased);
    CHECK_FALSE(is_erased_function(two.scaled(2.0), two).erased);
    CHECK_THROWS_AS(is_erased_function(two, GridFunction::zeros(0.0, 0.5, 7)), precondition_error);
    CHECK_THROWS_AS(is_erased_function(two.scaled(-1.0), two), precondition_error);
}

TEST_CASE("skorokhod star of a hand-made ramp", "[ladder][star]")
{
    // Left ramp through (-1,0), (-0.6,0.9), (-0.4,0.3), (0,1); plateau on [0,1]; linear right ramp to (2,0).
    const double h = 1.0 / 30.0;
    auto g_exact = [](double x) {
        if (x <= -1.0 || x >= 2.0) return 0.0;
        if (x <= -0.6) return 0.9 * (x + 1.0) / 0.4;
        if (x <= -0.4) return 0.9 - 0.6 * (x + 0.6) / 0.2;
        if (x <= 0.0) return 0.3 + 0.7 * (x + 0.4) / 0.4;
        if (x <= 1.0) return 1.0;
        return 2.0 - x;
    };
    std::vector<double> v(91);
    for (int i = 0; i <= 90; ++i) v[static_cast<std::size_t>(i)] = std::clamp(g_exact(-1.0 + i * h), 0.0, 1.0);
    for (int i = 30; i <= 60; ++i) v[static_cast<std::size_t>(i)] = 1.0;
    const GridFunction g(-1.0, h, v);
    const auto s = skorokhod_star(g, 0.0, 1.0, 1.0);
    for (int i = 0; i <= 90; ++i) {
        const double x = -1.0 + i * h;
        const double expect = x < -0.8667 || x > -0.4 + 1e-9 ? g[static_cast<std::size_t>(i)] : 0.3;
        INFO("x = " << x);
        CHECK(s[static_cast<std::size_t>(i)] == Approx(expect).margin(1e-12));
    }
    CHECK(is_erased_function(s, g).erased);

    const auto mono = make_plateau({0.0, 1.0, 0.5, RampProfile::smooth}, 1.0 / 64.0);
    CHECK(skorokhod_star(mono, 0.0, 1.0, 0.5).values() == mono.values());
    CHECK_THROWS_AS(skorokhod_star(mono, -0.2, 1.0, 0.5), precondition_error);
    CHECK_THROWS_AS(skorokhod_star(mono.scaled(2.0), 0.0, 1.0, 0.5), precondition_error);
    CHECK_THROWS_AS(skorokhod_star(mono, 0.0, 1.0, 0.25), precondition_error);
}

TEST_CASE("skorokhod star is an idempotent erasure into the plateau class", "[ladder][star]")
{
    Rng rng(101);
    for (int k = 0; k < 100; ++k) {
        const auto spec = random_plateau_spec(rng);
        const auto g = rough_plateau(rng, spec, spec.rho / uniform(rng, 4.0, 40.0));
        const auto s = skorokhod_star(g, spec.a, spec.b, spec.rho);
        REQUIRE(is_erased_function(s, g).erased);
        REQUIRE(skorokhod_star(s, spec.a, spec.b, spec.rho).values() == s.values());
        // Monotone on each ramp: at most one rise and one fall.
        REQUIRE(s.total_variation() == Approx(2.0).epsilon(1e-12));
        REQUIRE(s.max_value() == 1.0);
    }
}

TEST_CASE("ladder star", "[ladder][star]")
{
    const auto bump = bump_function(0.0, 1.0, 2.0, -1.5, 1.5, 1.0 / 32.0);
    const auto u = ladder_star(bump);
    CHECK(u.star.values() == bump.values());

    const auto f = two_peaks();
    const auto s = ladder_star(f);
    CHECK(s.peak_point == 1.0);
    CHECK(s.star.values() == std::vector<double>{0.0, 0.0, 1.0, 0.4, 0.4, 0.0, 0.0});
    CHECK(is_ladder_like(s.star));
    CHECK_FALSE(is_ladder_like(f));
    CHECK_THROWS_AS(ladder_star(GridFunction::zeros(0.0, 1.0, 3)), precondition_error);

    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        const auto g = random_multibump(rng, -1.0, 1.0, 1.0 / 64.0);
        const auto st = ladder_star(g);
        REQUIRE(st.star.max_value() == g.max_value());
        REQUIRE(is_ladder_like(st.star));
        REQUIRE(is_erased_function(st.star, g).erased);
        REQUIRE(ladder_star(st.star).star.values() == st.star.values());
        for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(st.star[i] <= g[i]);
    }
}

TEST_CASE("ladder decomposition", "[ladder][tree]")
{
    const auto bump = bump_function(0.0, 1.0, 1.0, -1.5, 1.5, 1.0 / 32.0);
    const auto one = ladder_decompose(bump, 10, 0.0);
    CHECK(one.node_count() == 1);
    CHECK(one.converged);
    CHECK(one.partial_sum(1).values() == bump.values());

    const auto two = ladder_decompose(two_peaks(), 10, 0.0);
    REQUIRE(two.node_count() == 2);
    CHECK(two.converged);
    CHECK(two.depth_built == 1);
    CHECK(two.partial_sum(2).values() == two_peaks().values());
    const auto root = two.root();
    REQUIRE(root.children.size() == 1);
    CHECK(root.children[0].address == std::vector<int>{1});
    CHECK(root.children[0].peak_point == 3.0);
    CHECK(root.children[0].excursion_sup == Approx(0.6));

    const auto capped = ladder_decompose(four_bump_function(1.0 / 128.0), 2, 0.0);
    CHECK_FALSE(capped.converged);
    CHECK(capped.node_count() == 2);
    CHECK(ladder_decompose(GridFunction::zeros(0.0, 1.0, 4), 3, 0.0).converged);
    CHECK_THROWS_AS(ladder_decompose(two_peaks().scaled(-1.0), 3, 0.0), precondition_error);
}

TEST_CASE("ladder partial sums are increasing erased functions with bounded energy", "[ladder][tree]")
{
    Rng rng(59);
    for (int k = 0; k < 20; ++k) {
        const auto f = random_multibump(rng, -1.0, 1.0, 1.0 / 128.0);
        const auto t = ladder_decompose(f, 200, 1e-3);
        REQUIRE(t.converged);
        for (std::size_t j = 1; j < t.trace.size(); ++j) REQUIRE(t.trace[j].estimate <= t.trace[j - 1].estimate);
        double lo = inf, hi = 0.0;
        GridFunction prev = GridFunction::zeros(f.origin(), f.step(), f.size());
        for (std::size_t n = 1; n <= t.node_count(); ++n) {
            const auto s = t.partial_sum(n);
            REQUIRE(is_erased_function(s, f).erased);
            for (std::size_t i = 0; i < f.size(); ++i) REQUIRE((s[i] >= prev[i] && s[i] <= f[i]));
            const double e1 = std::sqrt(grid_energy(s, 1.5) + l2_norm_sq(s));
            lo = std::min(lo, e1);
            hi = std::max(hi, e1);
            prev = s;
        }
        REQUIRE(hi <= 2.0 * std::sqrt(grid_energy(f, 1.5) + l2_norm_sq(f)));
        REQUIRE(hi / lo < 10.0);
    }
}

TEST_CASE("children avoid straddling their parent's peak", "[ladder][tree]")
{
    const auto t = ladder_decompose(four_bump_function(1.0 / 128.0), 100, 1e-4);
    for (std::size_t n = 1; n < t.node_count(); ++n) {
        const auto& p = t.nodes[static_cast<std::size_t>(t.parent[n])];
        const auto& c = t.nodes[n];
        CHECK((c.support.hi <= p.peak_point || c.support.lo >= p.peak_point));
        CHECK(c.support.lo >= p.support.lo);
        CHECK(c.support.hi <= p.support.hi);
    }
}

TEST_CASE("arm split", "[ladder][arms]")
{
    const GridFunction tri(-2.0, 1.0, {0.0, 0.5, 1.0, 0.5, 0.0});
    const auto a = arm_split(tri);
    CHECK(a.peak_point == 0.0);
    CHECK(a.left.values() == std::vector<double>{0.0, 0.5, 1.0, 1.0, 1.0});
    CHECK(a.right.values() == std::vector<double>{0.0, 0.0, 0.0, 0.5, 1.0});

    const GridFunction rising(0.0, 1.0, {0.0, 0.25, 0.5, 2.0});
    const auto r = arm_split(rising);
    CHECK(r.right.is_zero());
    CHECK(r.left.values() == rising.values());

    Rng rng(13);
    for (int k = 0; k < 50; ++k) {
        const auto h = ladder_star(random_multibump(rng, -1.0, 1.0, 1.0 / 64.0)).star;
        const auto s = arm_split(h);
        // right = peak - h, so the identity holds to one rounding of the peak value.
        for (std::size_t i = 0; i < h.size(); ++i) REQUIRE(std::abs(s.left[i] - s.right[i] - h[i]) <= std::numeric_limits<double>::epsilon() * h.max_value());
        REQUIRE(nondecreasing(s.left));
        REQUIRE(nondecreasing(s.right));
    }
    CHECK_THROWS_AS(arm_split(two_peaks()), precondition_error);
    CHECK_THROWS_AS(arm_split(GridFunction::zeros(0.0, 1.0, 3)), precondition_error);
}

TEST_CASE("dyadic step approximation error", "[ladder][rate]")
{
    const auto zero = step_rate_experiment(GridFunction::zeros(0.0, 1.0 / 64.0, 65), 0.5, 3, 6);
    for (const auto& [n, e] : zero.table) CHECK(e == 0.0);

    const auto tent = sample_on([](double x) { return std::max(0.0, 1.0 - std::abs(2.0 * x - 1.0)); }, 0.0, 1.0, 1.0 / 1024.0);
    for (double alpha : {0.3, 0.5, 0.7}) {
        const auto res = step_rate_experiment(tent, alpha, 3, 8);
        for (std::size_t k = 1; k < res.table.size(); ++k) CHECK(res.table[k].second < res.table[k - 1].second);
        // One-sided bound plus the observed rate: a sawtooth of height 2^-n has energy ~ 2^{n(alpha-2)}.
        CHECK(res.slope <= (alpha - 1.0) * 1.15);
        CHECK(res.slope == Approx(alpha - 2.0).margin(0.15));

        // Brute-force energy of tent - f_n, which is linear on each dyadic cell.
        for (std::size_t k = 0; k < 3; ++k) {
            const unsigned n = res.table[k].first;
            const auto fn = snap_to_dyadic_step(tent, n);
            const oracle::CellwiseLinear diff{[&](double y) { return tent(y) - fn(y); }, 0.0, std::ldexp(1.0, -static_cast<int>(n)),
                                              std::size_t{1} << n};
            CHECK(res.table[k].second == Approx(oracle::gagliardo(diff, alpha)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(step_rate_experiment(tent, 1.0, 3, 5), precondition_error);
}

TEST_CASE("transform of a plateau stays under 2/|xi|", "[ladder][bv]")
{
    std::vector<double> xi;
    for (int k = 0; k <= 400; ++k) xi.push_back(std::pow(10.0, 2.0 * k / 400.0));
    Rng rng(71);
    for (int k = 0; k < 100; ++k) {
        const auto spec = random_plateau_spec(rng);
        REQUIRE(bv_fourier_bound_check(make_plateau(spec, spec.rho / 8.0), xi) <= 1e-3);
    }
    // Sharp indicator limit: |xi f^(xi)| = |2 sin(xi/2)| / sqrt(2 pi).
    const auto sharp = make_plateau({0.0, 1.0, 1.0 / 512.0, RampProfile::linear}, 1.0 / 4096.0);
    double worst = -inf;
    for (double x : xi) worst = std::max(worst, std::abs(2.0 * std::sin(x / 2.0)) / std::sqrt(2.0 * pi) - 2.0);
    CHECK(bv_fourier_bound_check(sharp, xi) == Approx(worst).margin(0.01));
    CHECK_THROWS_AS(bv_fourier_bound_check(sharp.scaled(2.0), xi), precondition_error);
}
