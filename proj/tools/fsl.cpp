// SPDX-License-Identifier: MIT
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fsl/cli/commands.hpp"

namespace {

using fsl::json;

CLI::Option* real_option(CLI::App* sub, const std::string& flag, json& params, const std::string& key, const std::string& help)
{
    return sub->add_option_function<double>(flag, [&params, key](double v) { params[key] = v; }, help);
}

CLI::Option* text_option(CLI::App* sub, const std::string& flag, json& params, const std::string& key, const std::string& help)
{
    return sub->add_option_function<std::string>(flag, [&params, key](const std::string& v) { params[key] = v; }, help);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical checks for fractional Dirichlet forms, scale functions and Levy energies"};
    app.fallthrough();
    app.require_subcommand(1);
    fsl::cli::RunConfig config;
    json& p = config.params;
    app.add_option("--seed", config.seed, "seed of the randomized sweeps")->capture_default_str();
    app.add_option("--out-dir", config.out_dir, "directory for artifacts (default: $FSL_OUT_DIR, else none)");
    app.add_flag("--timing", config.timing, "report wall-clock runtimes (output is then machine-dependent)");

    auto* energy = app.add_subcommand("energy", "Gagliardo energy of a function literal");
    text_option(energy, "--function", p, "function", "indicator:a,b | plateau:a,b,rho[,profile] | bump:center,width | csv:path")->required();
    real_option(energy, "--alpha", p, "alpha", "stability index in (0, 2]")->required();
    real_option(energy, "--step", p, "step", "grid step for sampled literals");
    real_option(energy, "--xi-max", p, "xi_max", "also compute the Fourier-side energy up to this frequency");
    real_option(energy, "--n-freq", p, "n_freq", "frequency samples for the Fourier side");
    real_option(energy, "--divergence-ratio", p, "divergence_ratio", "growth factor of the refinement ratio test");

    auto* ladder = app.add_subcommand("ladder", "excursion-tree decomposition of a sampled function");
    text_option(ladder, "--function", p, "function", "plateau:..., bump:... or csv:path")->required();
    real_option(ladder, "--max-nodes", p, "max_nodes", "node budget (default 64)");
    real_option(ladder, "--sup-tol", p, "sup_tol", "stop when sup |f - partial sum| is below this (default 1e-3)");
    real_option(ladder, "--step", p, "step", "grid step for sampled literals");

    auto* scale = app.add_subcommand("scale", "fat Cantor set and its scale function");
    text_option(scale, "--spec", p, "spec", "fat Cantor spec: JSON file or inline JSON")->required();
    real_option(scale, "--n-intervals", p, "n_intervals", "number of intervals (default 7)");
    text_option(scale, "--window", p, "window", "lo,hi of the sampled scale function (default -1.5,1.5)");
    real_option(scale, "--step", p, "step", "sampling step of scale.csv (default 1/256)");

    auto* capacity = app.add_subcommand("capacity", "capacity of a finite union of intervals");
    text_option(capacity, "--target", p, "target", "intervals as a,b;c,d");
    text_option(capacity, "--target-file", p, "target_file", "JSON array of [lo, hi] pairs");
    real_option(capacity, "--alpha-star", p, "alpha_star", "order alpha* in (0, 1]")->required();
    text_option(capacity, "--domain", p, "domain", "lo,hi of the computational domain");
    real_option(capacity, "--step", p, "step", "grid step (default 1/64)");
    real_option(capacity, "--tolerance", p, "tolerance", "relative residual of the solver (default 1e-10)");

    auto* levy = app.add_subcommand("levy", "Levy symbol, finite variation and energies");
    text_option(levy, "--triplet", p, "triplet", "inline triplet JSON");
    text_option(levy, "--triplet-file", p, "triplet_file", "triplet JSON file");
    real_option(levy, "--xi-min", p, "xi_min", "smallest frequency (default 0.01)");
    real_option(levy, "--xi-max", p, "xi_max", "largest frequency (default 100)");
    real_option(levy, "--n-xi", p, "n_xi", "number of log-spaced frequencies (default 61)");
    real_option(levy, "--growth-xi-min", p, "growth_xi_min", "fit the growth exponent over |xi| >= this (default 1)");
    text_option(levy, "--function", p, "function", "function literal whose energy to report");
    real_option(levy, "--step", p, "step", "grid step for sampled literals");

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    text_option(verify, "target", p, "target", "properness: certify a fat Cantor set only");
    text_option(verify, "--suite", p, "suite", "core or all (default core)");
    verify->add_flag_function("--list", [&p](std::int64_t) { p["list"] = true; }, "list the checks and exit");
    real_option(verify, "--alpha", p, "alpha", "properness: stability index in [1, 2) (default 1.5)");
    real_option(verify, "--budget", p, "budget", "properness: surrogate budget (default 0.1)");
    real_option(verify, "--n-intervals", p, "n_intervals", "properness: number of intervals (default 7)");
    real_option(verify, "--step", p, "step", "properness: grid step (default 1/64)");
    real_option(verify, "--margin", p, "margin", "properness: ratio must be below 1 - margin (default 0.1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    const std::pair<CLI::App*, fsl::cli::Command> commands[] = {
        {energy, fsl::cli::Command::energy}, {ladder, fsl::cli::Command::ladder}, {scale, fsl::cli::Command::scale},
        {capacity, fsl::cli::Command::capacity}, {levy, fsl::cli::Command::levy}, {verify, fsl::cli::Command::verify}};
    for (const auto& [sub, cmd] : commands)
        if (sub->parsed()) config.command = cmd;
    if (config.command == fsl::cli::Command::scale && p["spec"].get<std::string>().starts_with("{")) {
        try {
            p["spec"] = json::parse(p["spec"].get<std::string>());
        } catch (const json::parse_error& e) {
            std::cerr << "fsl: --spec: " << e.what() << "\n";
            return 1;
        }
    }
    return fsl::cli::run(config, std::cout, std::cerr);
}
