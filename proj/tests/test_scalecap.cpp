// SPDX-License-Identifier: MIT
#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "fsl/cli/families.hpp"
#include "fsl/energy.hpp"
#include "fsl/scalecap.hpp"

using namespace fsl;
using Catch::Approx;

namespace {

// Measure of the union of raw (possibly overlapping) intervals inside (x, y), by sorting and sweeping.
double union_measure(std::vector<Interval> parts, double x, double y)
{
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double total = 0.0, cur_lo = -inf, cur_hi = -inf;
    auto flush = [&] {
        if (cur_hi > cur_lo) total += std::max(0.0, std::min(cur_hi, y) - std::max(cur_lo, x));
    };
    for (const auto& p : parts) {
        if (p.lo > cur_hi) {
            flush();
            cur_lo = p.lo;
            cur_hi = p.hi;
        } else {
            cur_hi = std::max(cur_hi, p.hi);
        }
    }
    flush();
    return total;
}

FatCantor fat(double alpha, double budget, std::size_t n)
{
    FatCantorSpec spec;
    spec.alpha = alpha;
    spec.budget = budget;
    return build_fat_cantor(spec, n);
}

std::vector<Interval> raw_parts(const FatCantor& g)
{
    std::vector<Interval> parts{{-inf, -1.0}, {1.0, inf}};
    for (std::size_t i = 0; i < g.radii.size(); ++i) parts.push_back({g.centers[i] - g.radii[i], g.centers[i] + g.radii[i]});
    return parts;
}

ScaleFunction random_union_scale(Rng& rng)
{
    std::vector<Interval> parts{{-inf, -1.0}, {1.0, inf}};
    const int k = uniform_int(rng, 1, 6);
    for (int i = 0; i < k; ++i) {
        const double c = uniform(rng, -0.9, 0.9), w = uniform(rng, 0.01, 0.1);
        parts.push_back({c - w, c + w});
    }
    return ScaleFunction(IntervalSet(std::move(parts)));
}

} // namespace

TEST_CASE("scale function of the whole line is the identity", "[scale]")
{
    const ScaleFunction s(IntervalSet::whole_line());
    for (double x : {-3.5, -1.0, 0.0, 0.25, 7.0}) CHECK(s(x) == x);
    CHECK(s.strictly_increasing());
    const auto adm = brownian_scale_admissible(s);
    CHECK(adm.admissible);
    CHECK(adm.zero_set_measure == 0.0);
}

TEST_CASE("scale function increments are interval measures", "[scale]")
{
    const ScaleFunction s(IntervalSet({{-inf, 0.0}, {0.4, 0.6}, {1.0, inf}}));
    CHECK(s(1.0) - s(0.0) == Approx(0.2).epsilon(1e-15));
    CHECK(s(0.5) == Approx(0.1));
    CHECK(s(-2.0) == -2.0);
    CHECK(s(3.0) == Approx(2.2));
    CHECK_FALSE(s.strictly_increasing());
    CHECK(s.max_gap() == Approx(0.4));
    CHECK(s(s.preimage(0.15)) == Approx(0.15));

    Rng rng(2);
    for (int k = 0; k < 5; ++k) {
        const auto g = fat(uniform(rng, 1.2, 1.9), uniform(rng, 0.05, 0.5), static_cast<std::size_t>(uniform_int(rng, 1, 31)));
        const auto parts = raw_parts(g);
        const ScaleFunction sg(g.g_set, uniform(rng, -0.5, 0.5));
        for (int j = 0; j < 200; ++j) {
            double x = uniform(rng, -2.0, 2.0), y = uniform(rng, -2.0, 2.0);
            if (x > y) std::swap(x, y);
            REQUIRE(sg(y) - sg(x) == Approx(union_measure(parts, x, y)).margin(1e-15));
            REQUIRE(sg(y) - sg(x) <= y - x + 1e-15);
        }
        for (double y : {-0.3, 0.0, 0.01, 0.4}) REQUIRE(sg(sg.preimage(y)) == Approx(y).margin(1e-15));
        const auto adm = brownian_scale_admissible(sg);
        CHECK(adm.admissible);
        CHECK(adm.zero_set_measure == Approx(2.0 - union_measure(parts, -1.0, 1.0)).margin(1e-14));
    }
}

TEST_CASE("fat Cantor construction", "[fatcantor]")
{
    CHECK(dyadic_centers(7) == std::vector<double>{0.0, -0.5, 0.5, -0.75, -0.25, 0.25, 0.75});

    // Geometric rule: r_i^{alpha-1} = eps 2^{-i}, so the surrogate sum is eps (1 - 2^{-n}).
    FatCantorSpec spec;
    spec.alpha = 1.5;
    spec.budget = 0.2;
    spec.epsilon = 0.1;
    const auto g = build_fat_cantor(spec, 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(g.radii[i] == Approx(std::pow(0.1 * std::ldexp(1.0, -static_cast<int>(i + 1)), 2.0)));
    CHECK(g.surrogate_sum == Approx(0.1 * (1.0 - std::ldexp(1.0, -10))).epsilon(1e-14));
    CHECK(g.g_set.measure_within(-1.0, 1.0) == Approx(union_measure(raw_parts(g), -1.0, 1.0)).epsilon(1e-14));

    FatCantorSpec one;
    one.radii_rule = FatCantorSpec::Radii::explicit_list;
    one.radii = {0.1};
    one.budget = 1.0;
    CHECK(build_fat_cantor(one, 1).g_set == IntervalSet({{-inf, -1.0}, {-0.1, 0.1}, {1.0, inf}}));

    FatCantorSpec greedy = one;
    greedy.radii = {0.2, 0.2, 0.2};
    greedy.budget = 0.5;
    CHECK_THROWS_WITH(build_fat_cantor(greedy, 3), Catch::Matchers::ContainsSubstring("partial sum"));
    greedy.radii = {0.01, 0.6};
    greedy.budget = 10.0;
    CHECK_THROWS_AS(build_fat_cantor(greedy, 2), precondition_error);

    // alpha = 1: surrogate 1 / log(a / r).
    FatCantorSpec log_spec;
    log_spec.alpha = 1.0;
    log_spec.budget = 0.5;
    const auto gl = build_fat_cantor(log_spec, 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(1.0 / std::log(log_spec.log_scale / gl.radii[i]) == Approx(0.5 * std::ldexp(1.0, -static_cast<int>(i + 1))));

    CHECK(fat(1.5, 0.3, 15).dense_depth == 3);
    CHECK(fat(1.5, 0.3, 1).dense_depth == 0);

    const auto from_json = fat_cantor_spec_from_json(json::parse(R"({"alpha":1.7,"budget":0.2,"radii":{"rule":"geometric","epsilon":0.05}})"));
    CHECK(from_json.alpha == 1.7);
    CHECK(from_json.epsilon == 0.05);
    CHECK_THROWS_AS(fat_cantor_spec_from_json(json::parse(R"({"alpha":2.5,"budget":0.2})")), precondition_error);
}

TEST_CASE("composition with a scale function", "[compose]")
{
    const auto f = bump_function(0.0, 0.5, 1.0, -0.5, 0.5, 1.0 / 64.0);
    const auto id = compose_scale(f, ScaleFunction(IntervalSet::whole_line()), {-1.0, 1.0}, 1.0 / 64.0);
    for (std::size_t i = 0; i < id.sampled.size(); ++i)
        CHECK(id.sampled[i] == Approx(f(id.sampled.x(static_cast<std::ptrdiff_t>(i)))).margin(1e-15));

    // s flat on [0,1]: the composition is constant there.
    const GridFunction hat(-1.0, 0.5, {0.0, 0.5, 1.0, 0.5, 0.0});
    const ScaleFunction gap(IntervalSet({{-inf, 0.0}, {1.0, inf}}));
    const auto c = compose_scale(hat, gap, {-1.5, 2.5}, 1.0 / 32.0);
    for (double x = 0.0; x <= 1.0; x += 1.0 / 32.0) CHECK(c.exact(x) == Approx(1.0));
    CHECK(c.exact(-0.5) == Approx(0.5));
    CHECK(c.exact(1.5) == Approx(0.5));
    CHECK_THROWS_AS(compose_scale(hat, gap, {-0.5, 2.5}, 1.0 / 32.0), precondition_error);

    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        const auto s = random_union_scale(rng);
        const Interval w{-1.5, 1.5};
        const double y0 = s(w.lo), y1 = s(w.hi);
        const auto g = random_bump(rng, y0, y1, (y1 - y0) / 64.0);
        const auto comp = compose_scale(g, s, w, 3.0 / 64.0);
        const auto& v = comp.sampled;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const double si = s(v.x(static_cast<std::ptrdiff_t>(i))), sj = s(v.x(static_cast<std::ptrdiff_t>(j)));
                REQUIRE(std::abs(v[i] - v[j]) <= comp.lipschitz * std::abs(si - sj) + 1e-12);
            }
    }
}

TEST_CASE("composition energy is finite and stable under refinement", "[compose]")
{
    for (double alpha : {1.3, 1.7}) {
        const ScaleFunction s(fat(alpha, 0.1, 7).g_set);
        const Interval w{-2.0, 2.0};
        const auto f = bump_function(0.5 * (s(w.lo) + s(w.hi)), 0.45 * (s(w.hi) - s(w.lo)), 1.0, s(w.lo), s(w.hi), 1.0 / 128.0);
        EnergyParams p;
        p.alpha = alpha;
        const auto coarse = gagliardo_energy(compose_scale(f, s, w, 1.0 / 256.0).sampled, p);
        const auto fine = gagliardo_energy(compose_scale(f, s, w, 1.0 / 512.0).sampled, p);
        CHECK_FALSE(coarse.divergent);
        CHECK_FALSE(fine.divergent);
        CHECK(fine.value == Approx(coarse.value).epsilon(0.05));
    }
}

TEST_CASE("pushforward measure", "[measure]")
{
    const ScaleFunction id(IntervalSet::whole_line());
    const GridFunction up(-1.0, 1.0, {0.0, 0.0, 1.0, 0.0, 0.0});  // rises on [0,1], falls on [1,2]
    const auto c = compose_scale(up, id, {-1.0, 3.0}, 0.25);
    const auto m = pushforward_measure(c, id);
    REQUIRE(m.density_segments.size() == 2);
    CHECK(m.density_segments[0].density == Approx(1.0));
    CHECK(m.density_segments[0].where.lo == Approx(0.0));
    CHECK(m.density_segments[0].where.hi == Approx(1.0));
    CHECK(m.density_segments[1].density == Approx(-1.0));
    CHECK(m.total_mass() == Approx(0.0).margin(1e-15));
    CHECK(m.atoms.empty());

    const auto flat = compose_scale(GridFunction::zeros(-1.0, 0.5, 5), id, {-1.0, 1.0}, 0.25);
    CHECK(pushforward_measure(flat, id).density_segments.empty());

    Rng rng(8);
    for (int k = 0; k < 30; ++k) {
        const auto s = random_union_scale(rng);
        const Interval w{-1.5, 1.5};
        const auto f = random_bump(rng, s(w.lo), s(w.hi), (s(w.hi) - s(w.lo)) / 100.0);
        const auto cc = compose_scale(f, s, w, 3.0 / 256.0);
        const auto mm = pushforward_measure(cc, s);
        REQUIRE(mm.positive_mass() <= cc.lipschitz * s.g_set().measure_within(w.lo, w.hi) + 1e-12);
        for (const auto& seg : mm.density_segments)
            REQUIRE(s.g_set().measure_within(seg.where.lo, seg.where.hi) == Approx(seg.where.length()));
    }
}

TEST_CASE("duality pairing against brute-force integrals", "[measure]")
{
    // Identity scale: -\int x phi' = \int phi.
    const ScaleFunction id(IntervalSet::whole_line());
    const GridFunction ramp_up(-3.0, 1.0, {0.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 0.0});
    const auto phi0 = bump_function(0.5, 0.4, 1.0, 0.0, 1.0, 1.0 / 128.0);
    const auto d0 = duality_pairing_check(compose_scale(ramp_up, id, {-3.0, 4.0}, 1.0 / 64.0), id, phi0);
    CHECK(d0.lhs == Approx(integral(phi0, 0.0, 1.0)).epsilon(1e-12));
    CHECK(d0.rhs == Approx(d0.lhs).epsilon(1e-12));

    // phi inside a removed interval of G: both sides vanish.
    const ScaleFunction gap(IntervalSet({{-inf, 0.0}, {1.0, inf}}));
    const auto f = bump_function(0.0, 1.0, 1.0, -1.0, 1.0, 1.0 / 64.0);
    const auto inside = bump_function(0.5, 0.3, 1.0, 0.1, 0.9, 1.0 / 128.0);
    const auto dg = duality_pairing_check(compose_scale(f, gap, {-1.5, 2.5}, 1.0 / 64.0), gap, inside);
    CHECK(dg.lhs == Approx(0.0).margin(1e-14));
    CHECK(dg.rhs == 0.0);

    Rng rng(19);
    for (int k = 0; k < 20; ++k) {
        const ScaleFunction s = k % 2 ? random_union_scale(rng) : ScaleFunction(fat(uniform(rng, 1.5, 1.9), 0.2, 9).g_set);
        const Interval w{-uniform(rng, 1.2, 2.0), uniform(rng, 1.2, 2.0)};
        const double y0 = s(w.lo), y1 = s(w.hi);
        const auto g = random_bump(rng, y0, y1, (y1 - y0) / 200.0);
        const auto phi = random_bump(rng, w.lo, w.hi, w.length() / 256.0);
        const auto c = compose_scale(g, s, w, w.length() / 512.0);
        const auto d = duality_pairing_check(c, s, phi);

        // Pieces on which both f o s and phi are affine: knots of the composition plus phi's nodes.
        std::vector<double> cuts = c.exact.x;
        for (std::size_t i = 0; i < phi.size(); ++i) cuts.push_back(phi.x(static_cast<std::ptrdiff_t>(i)));
        std::sort(cuts.begin(), cuts.end());
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            const double a = cuts[j], b = cuts[j + 1];
            if (b <= a || a < w.lo || b > w.hi) continue;
            const double fa = g(s(a)), fb = g(s(b));
            const double slope_phi = (phi(b) - phi(a)) / (b - a);
            lhs -= slope_phi * boost::math::quadrature::gauss<double, 3>::integrate([&](double x) { return g(s(x)); }, a, b);
            rhs += (fb - fa) / (b - a) * boost::math::quadrature::gauss<double, 3>::integrate([&](double x) { return phi(x); }, a, b);
        }
        REQUIRE(d.lhs == Approx(lhs).margin(1e-12));
        REQUIRE(d.rhs == Approx(rhs).margin(1e-12));
        REQUIRE(std::abs(d.lhs - d.rhs) <= 1e-4 * (1.0 + std::abs(d.lhs)));
    }
}

TEST_CASE("capacity of the empty set is zero and the equilibrium obeys the maximum principle", "[capacity]")
{
    CHECK(capacity_estimate(IntervalSet{}, 0.5, {-1.0, 1.0}, 1.0 / 32.0).value == 0.0);
    const IntervalSet target({{-0.25, 0.25}});
    const auto c = capacity_estimate(target, 0.5, default_capacity_domain(target), 1.0 / 32.0);
    CHECK(c.residual <= 1e-10);
    CHECK(c.clamp_violation < 1e-6);
    const auto& u = c.equilibrium;
    for (std::size_t i = 0; i < u.size(); ++i) {
        REQUIRE(u[i] >= 0.0);
        REQUIRE(u[i] <= 1.0);
        if (std::abs(u.x(static_cast<std::ptrdiff_t>(i))) < 0.25) REQUIRE(u[i] == 1.0);
    }
    CHECK(c.value == Approx(grid_energy(u, 0.5) + l2_norm_sq(u)).epsilon(1e-14));
    CHECK_THROWS_AS(capacity_estimate(target, 1.5, {-1.0, 1.0}, 0.1), precondition_error);
    CHECK_THROWS_AS(capacity_estimate(target, 0.5, {-0.1, 1.0}, 0.1), precondition_error);
}

TEST_CASE("capacity is monotone and subadditive", "[capacity]")
{
    Rng rng(29);
    const Interval domain{-3.0, 3.0};
    const double h = 1.0 / 32.0;
    for (int k = 0; k < 20; ++k) {
        const double c = uniform(rng, -1.0, 1.0), r = uniform(rng, 0.05, 0.4);
        const IntervalSet small({{c - r, c + r}});
        const IntervalSet big({{c - r - uniform(rng, 0.05, 0.5), c + r + uniform(rng, 0.0, 0.5)}});
        const double alpha_star = uniform(rng, 0.2, 1.0);
        REQUIRE(capacity_estimate(small, alpha_star, domain, h).value <= capacity_estimate(big, alpha_star, domain, h).value);
    }
    for (int k = 0; k < 10; ++k) {
        const double a = uniform(rng, -2.0, -0.5), b = uniform(rng, 0.5, 2.0);
        const IntervalSet A({{a - 0.2, a + 0.2}}), B({{b - 0.3, b + 0.3}});
        const IntervalSet AB({{a - 0.2, a + 0.2}, {b - 0.3, b + 0.3}});
        const double alpha_star = uniform(rng, 0.2, 1.0);
        REQUIRE(capacity_estimate(AB, alpha_star, domain, h).value <=
                (capacity_estimate(A, alpha_star, domain, h).value + capacity_estimate(B, alpha_star, domain, h).value) * (1.0 + 1e-9));
    }
}

TEST_CASE("capacity of small intervals at alpha = 1 decays like 1/log(1/r)", "[capacity]")
{
    double v[2];
    const double rs[2] = {0.1, 0.01};
    for (int k = 0; k < 2; ++k) {
        const IntervalSet t({{-rs[k], rs[k]}});
        v[k] = capacity_estimate(t, 1.0, default_capacity_domain(t), rs[k] / 16.0).value * std::log(1.0 / rs[k]);
    }
    CHECK(v[0] / v[1] < 3.0);
    CHECK(v[1] / v[0] < 3.0);
}

TEST_CASE("capacity domain sensitivity", "[capacity]")
{
    const IntervalSet t({{-0.2, 0.2}});
    CHECK(capacity_window_drift(t, 0.5, default_capacity_domain(t), 1.0 / 32.0) < 0.05);
}

TEST_CASE("concentration test", "[properness]")
{
    const auto full = concentration_test(IntervalSet::whole_line(), 0.5, {-1.0, 1.0}, 1.0 / 32.0);
    CHECK(full.ratio == 1.0);
    CHECK(full.verdict_line(0.1).rfind("INCONCLUSIVE", 0) == 0);

    double prev = 1.0;
    for (double budget : {0.4, 0.2, 0.1}) {
        const auto r = concentration_test(fat(1.5, budget, 7).g_set, 0.5, {-1.0, 1.0}, 1.0 / 64.0);
        CHECK(r.ratio <= prev);
        CHECK(r.ratio > 0.0);
        prev = r.ratio;
    }
    CHECK(prev < 0.9);
}
