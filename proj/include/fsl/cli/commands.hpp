// SPDX-License-Identifier: MIT
#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "fsl/cli/config.hpp"
#include "fsl/cli/criteria.hpp"
#include "fsl/cli/verdict.hpp"
#include "fsl/fsl.hpp"

namespace fsl::cli {

namespace detail {

inline double param(const json& p, const char* key, double fallback) { return p.contains(key) ? p.at(key).get<double>() : fallback; }

inline double required_param(const json& p, const char* key)
{
    require(p.contains(key), std::string("missing required parameter --") + key);
    return p.at(key).get<double>();
}

inline std::string required_string(const json& p, const char* key)
{
    require(p.contains(key), std::string("missing required parameter --") + key);
    return p.at(key).get<std::string>();
}

// "lo,hi" or [lo, hi].
inline Interval param_interval(const json& p, const char* key, Interval fallback)
{
    if (!p.contains(key)) return fallback;
    const auto& v = p.at(key);
    std::vector<double> r;
    if (v.is_string())
        r = parse_reals(v.get<std::string>(), 2, 2, v.get<std::string>());
    else
        r = v.get<std::vector<double>>();
    require(r.size() == 2 && r[0] < r[1], std::string("--") + key + " must be lo,hi with lo < hi");
    return {r[0], r[1]};
}

class Artifacts {
public:
    Artifacts(std::string dir, std::ostream& out) : dir_(std::move(dir)), out_(out)
    {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    void write(const std::string& name, const std::string& content) const
    {
        if (dir_.empty()) return;
        const auto path = (std::filesystem::path(dir_) / name).string();
        write_file_atomic(path, content);
        out_ << "# wrote " << path << "\n";
    }

private:
    std::string dir_;
    std::ostream& out_;
};

inline void header(std::ostream& out, const RunConfig& c)
{
    out << "# fsl " << to_string(c.command) << " seed=" << c.seed << "\n";
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline int cmd_energy(const RunConfig& c, std::ostream& out)
{
    const auto& p = c.params;
    const std::string literal = required_string(p, "function");
    EnergyParams ep;
    ep.alpha = required_param(p, "alpha");
    ep.divergence_ratio = param(p, "divergence_ratio", ep.divergence_ratio);
    ep.validate();
    const auto f = parse_function(literal, param(p, "step", 0.0));

    json j{{"command", "energy"}, {"seed", c.seed}, {"function", literal}, {"alpha", round12(ep.alpha)}};
    if (const auto* s = std::get_if<StepFunction>(&f)) {
        j["report"] = to_json(gagliardo_energy(*s, ep));
        if (s->levels().size() == 1 && s->levels()[0] == 1.0 && ep.alpha < 2.0) {
            const auto cf = indicator_energy_closed_form(s->breakpoints()[0], s->breakpoints()[1], ep.alpha);
            j["closed_form"] = cf.divergent ? json("divergent") : json(round12(cf.value));
        }
    } else {
        const auto& g = std::get<GridFunction>(f);
        const auto rep = gagliardo_energy(g, ep);
        j["report"] = to_json(rep);
        if (p.contains("xi_max") && ep.alpha < 2.0) {
            const double xi_max = p.at("xi_max").get<double>();
            const auto n = static_cast<std::size_t>(param(p, "n_freq", 4096));
            const double fe = fourier_energy(g, ep, xi_max, n);
            j["fourier"] = {{"xi_max", round12(xi_max)},
                            {"n_freq", n},
                            {"value", round12(fe)},
                            {"c_of_alpha", rep.value > 0 ? json(round12(2.0 * fe / rep.value)) : json(nullptr)},
                            {"analytic_c_of_alpha", round12(2.0 / (2.0 * stable_symbol_constant(ep.alpha)))}};
        }
    }
    header(out, c);
    out << dump(j);
    Artifacts(resolve_out_dir(c), out).write("energy.json", dump(j));
    return 0;
}

inline int cmd_ladder(const RunConfig& c, std::ostream& out)
{
    const auto& p = c.params;
    const std::string literal = required_string(p, "function");
    const auto f = require_grid(parse_function(literal, param(p, "step", 0.0)), "ladder");
    const auto max_nodes = static_cast<std::size_t>(param(p, "max_nodes", 64));
    const double sup_tol = param(p, "sup_tol", 1e-3);
    const auto tree = ladder_decompose(f, max_nodes, sup_tol);

    json trace = json::array();
    for (const auto& t : tree.trace) trace.push_back({round12(t.resolution), round12(t.estimate)});
    json summary{{"command", "ladder"},       {"seed", c.seed},
                 {"function", literal},       {"status", tree.converged ? "CONVERGED" : "NOT_CONVERGED"},
                 {"nodes", tree.node_count()}, {"depth_built", tree.depth_built},
                 {"sup_tol", round12(sup_tol)}, {"trace", trace}};
    header(out, c);
    out << dump(summary);
    Artifacts a(resolve_out_dir(c), out);
    a.write("tree.json", dump(to_json(tree)));
    a.write("trace.csv", "part,nodes,gap\n" + trace_csv(tree, "f"));
    return 0;
}

inline int cmd_scale(const RunConfig& c, std::ostream& out)
{
    const auto& p = c.params;
    require(p.contains("spec"), "missing required parameter --spec");
    const auto spec = fat_cantor_spec_from_json(inline_or_file(p.at("spec")));
    const auto n = static_cast<std::size_t>(param(p, "n_intervals", 7));
    const auto fc = build_fat_cantor(spec, n);
    const ScaleFunction s(fc.g_set);
    const Interval window = param_interval(p, "window", {-1.5, 1.5});
    const double step = param(p, "step", 1.0 / 256.0);
    require(step > 0, "--step must be positive");
    const auto adm = brownian_scale_admissible(s, {-1.0, 1.0});

    json radii = json::array(), centers = json::array();
    for (double r : fc.radii) radii.push_back(round12(r));
    for (double x : fc.centers) centers.push_back(round12(x));
    json j{{"command", "scale"},
           {"seed", c.seed},
           {"g_set", to_json(fc.g_set)},
           {"centers", centers},
           {"radii", radii},
           {"surrogate_sum", round12(fc.surrogate_sum)},
           {"budget", round12(spec.budget)},
           {"dense_depth", fc.dense_depth},
           {"strictly_increasing", s.strictly_increasing()},
           {"max_gap", round12(s.max_gap())},
           {"brownian_admissible", adm.admissible},
           {"zero_set_measure", round12(adm.zero_set_measure)}};
    header(out, c);
    out << dump(j);

    std::string csv = "x,s\n";
    const auto cells = static_cast<std::size_t>(std::floor(window.length() / step + 1e-9));
    for (std::size_t k = 0; k <= cells; ++k) {
        const double x = window.lo + static_cast<double>(k) * step;
        csv += fmt12(x) + "," + fmt12(s(x)) + "\n";
    }
    Artifacts a(resolve_out_dir(c), out);
    a.write("G.json", dump(to_json(fc.g_set)));
    a.write("scale.csv", csv);
    return 0;
}

inline int cmd_capacity(const RunConfig& c, std::ostream& out)
{
    const auto& p = c.params;
    IntervalSet target;
    if (p.contains("target_file"))
        target = parse_interval_set(read_json_file(p.at("target_file").get<std::string>()));
    else if (p.contains("target"))
        target = parse_interval_set(p.at("target"));
    else
        throw precondition_error("missing required parameter --target or --target-file");
    require(!target.empty(), "capacity target is empty");
    const double alpha_star = required_param(p, "alpha_star");
    const Interval domain = param_interval(p, "domain", default_capacity_domain(target));
    const double step = param(p, "step", 1.0 / 64.0);
    CapacityOptions opt;
    opt.tolerance = param(p, "tolerance", opt.tolerance);
    const auto cap = capacity_estimate(target, alpha_star, domain, step, opt);

    json j{{"command", "capacity"},
           {"seed", c.seed},
           {"convention", "E_1 without the C(alpha)/2 prefactor"},
           {"target", to_json(target)},
           {"alpha_star", round12(alpha_star)},
           {"domain", {round12(domain.lo), round12(domain.hi)}},
           {"value", round12(cap.value)},
           {"residual", round12(cap.residual)},
           {"iterations", cap.iterations},
           {"resolution", round12(cap.resolution)},
           {"clamp_violation", round12(cap.clamp_violation)}};
    header(out, c);
    out << dump(j);
    Artifacts(resolve_out_dir(c), out).write("capacity.json", dump(to_json(cap)));
    return 0;
}

inline int cmd_levy(const RunConfig& c, std::ostream& out)
{
    const auto& p = c.params;
    LevyTriplet t;
    if (p.contains("triplet_file"))
        t = levy_triplet_from_json(read_json_file(p.at("triplet_file").get<std::string>()));
    else if (p.contains("triplet"))
        t = levy_triplet_from_json(p.at("triplet").is_string() ? json::parse(p.at("triplet").get<std::string>()) : p.at("triplet"));
    else
        throw precondition_error("missing required parameter --triplet or --triplet-file");

    const auto xi = log_spaced(param(p, "xi_min", 0.01), param(p, "xi_max", 100.0), static_cast<std::size_t>(param(p, "n_xi", 61)));
    const auto curve = levy_symbol(t, xi);
    const auto fv = finite_variation_test(t);

    json j{{"command", "levy"},
           {"seed", c.seed},
           {"convention", "energies without the 1/2 prefactor"},
           {"triplet", to_json(t)},
           {"finite_variation", {{"finite", fv.finite}, {"integral", number_json(fv.value)}}}};
    const double growth_min = param(p, "growth_xi_min", 1.0);
    try {
        const auto g = growth_exponent_fit(curve, growth_min);
        const bool hypothesis = g.reliable && g.alpha_hat >= 1.0 - 0.02;
        j["growth"] = {{"alpha_hat", round12(g.alpha_hat)},
                       {"c_hat", round12(g.c_hat)},
                       {"r_squared", round12(g.r_squared)},
                       {"reliable", g.reliable},
                       {"growth_hypothesis_holds", hypothesis},
                       {"verdict", std::string(hypothesis ? "proper subspaces exist" : "no conclusion") +
                                       " (theorem-backed: follows from the growth hypothesis by a theorem, not computed here)"}};
    } catch (const precondition_error& e) {
        j["growth"] = {{"error", e.what()}};
    }
    if (p.contains("function")) {
        const std::string literal = p.at("function").get<std::string>();
        const auto f = parse_function(literal, param(p, "step", 0.0));
        j["function"] = literal;
        if (const auto* s = std::get_if<StepFunction>(&f)) {
            require(s->levels().size() == 1, "levy: only indicators are supported among step functions");
            const auto e = levy_indicator_energy(s->breakpoints()[0], s->breakpoints()[1], t);
            j["energy"] = e.divergent ? json("divergent") : json(round12(e.value));
        } else {
            j["energy"] = round12(levy_gagliardo_energy(std::get<GridFunction>(f), t).value);
        }
    }
    header(out, c);
    out << dump(j);

    std::string csv = "xi,psi\n";
    for (std::size_t k = 0; k < curve.xi.size(); ++k) csv += fmt12(curve.xi[k]) + "," + fmt12(curve.psi[k]) + "\n";
    Artifacts a(resolve_out_dir(c), out);
    a.write("levy.json", dump(j));
    a.write("symbol.csv", csv);
    return 0;
}

inline CheckContext check_context(const RunConfig& c)
{
    CheckContext ctx;
    ctx.seed = c.seed;
    const auto& p = c.params;
    ctx.alpha = param(p, "alpha", ctx.alpha);
    ctx.budget = param(p, "budget", ctx.budget);
    ctx.n_intervals = static_cast<std::size_t>(param(p, "n_intervals", static_cast<double>(ctx.n_intervals)));
    ctx.step = param(p, "step", ctx.step);
    ctx.margin = param(p, "margin", ctx.margin);
    return ctx;
}

inline void print_record(std::ostream& out, const VerdictRecord& r)
{
    out << to_string(r.status) << " " << r.check_id << " measured=" << join_measured(r.measured) << " tolerance=" << fmt12(r.tolerance)
        << " runtime_ms=" << r.runtime_ms << "\n";
    if (!r.detail.empty()) out << "  " << r.detail << "\n";
}

inline int cmd_verify(const RunConfig& c, std::ostream& out)
{
    const auto& p = c.params;
    if (p.value("list", false)) {
        for (const auto& chk : all_checks())
            out << chk.number << " " << chk.id << (chk.core ? " [core]" : "") << " " << chk.statement << "\n";
        return 0;
    }
    const auto ctx = check_context(c);
    std::vector<VerdictRecord> records;
    const std::string target = p.value("target", std::string());
    const std::string suite = p.value("suite", std::string("core"));
    if (!target.empty()) {
        require(target == "properness", "verify: unknown target '" + target + "' (expected properness)");
        detail::Stopwatch sw;
        FatCantorSpec spec;
        spec.alpha = ctx.alpha;
        spec.budget = ctx.budget;
        const auto g = build_fat_cantor(spec, ctx.n_intervals).g_set;
        const auto res = concentration_test(g, 2.0 - ctx.alpha, {-1.0, 1.0}, ctx.step);
        header(out, c);
        out << "# alpha=" << fmt12(ctx.alpha) << " budget=" << fmt12(ctx.budget) << " n_intervals=" << ctx.n_intervals
            << " step=" << fmt12(ctx.step) << " margin=" << fmt12(ctx.margin) << "\n";
        out << res.verdict_line(ctx.margin) << "\n";
        records.push_back({"properness-certification", res.proper(ctx.margin) ? Status::pass : Status::inconclusive,
                           {res.ratio, res.cap_g_in_window, res.cap_window}, 1.0 - ctx.margin, sw.ms(),
                           "Cap(G n W) / Cap(W) with W = (-1, 1)"});
    } else {
        require(suite == "core" || suite == "all", "verify: --suite must be core or all");
        header(out, c);
        out << "# suite=" << suite << "\n";
        for (const auto& chk : all_checks())
            if (suite == "all" || chk.core) records.push_back(run_check(chk, ctx));
    }
    bool ok = true;
    for (auto& r : records) {
        if (!c.timing) r.runtime_ms = 0;
        ok = ok && acceptable(r.status);
        print_record(out, r);
    }
    Artifacts(resolve_out_dir(c), out).write("verdicts.csv", table_csv(records));
    return ok ? 0 : 2;
}

} // namespace detail

// Exit codes: 0 when every verdict is PASS or expected, 2 on a failed verdict or solver
// failure, 1 on malformed input or IO errors.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        switch (c.command) {
        case Command::energy: return detail::cmd_energy(c, out);
        case Command::ladder: return detail::cmd_ladder(c, out);
        case Command::scale: return detail::cmd_scale(c, out);
        case Command::capacity: return detail::cmd_capacity(c, out);
        case Command::levy: return detail::cmd_levy(c, out);
        case Command::verify: return detail::cmd_verify(c, out);
        }
    } catch (const solver_error& e) {
        err << "fsl: solver failure: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "fsl: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "fsl: malformed parameter: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "fsl: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace fsl::cli
