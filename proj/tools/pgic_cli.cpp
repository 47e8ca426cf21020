// pgic: noisy-interference sum-rate capacity of parallel Gaussian
// interference channels.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pgic/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Sum-rate capacity of parallel Gaussian interference channels under noisy interference"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

    std::string instance;
    pgic::SolveOptions solve_opts;
    std::size_t resolution = 400;

    auto* check = app.add_subcommand("check", "Report channel classes, corners and power-region membership");
    check->add_option("instance", instance, "Instance JSON file")->required();

    auto* solve = app.add_subcommand("solve", "Optimal power allocation as CSV");
    solve->add_option("instance", instance, "Instance JSON file")->required();
    solve->add_flag("--bits", solve_opts.bits, "Report rates in bits instead of nats");
    solve->add_option("--oracle", solve_opts.oracle_steps, "Compare with a grid search using N steps per axis");
    solve->add_option("--audit", solve_opts.audit_samples, "Run the genie bound audit with N random allocations");
    solve->add_option("--seed", solve_opts.seed, "Seed for the audit");

    double a_min = 0.01, a_max = 0.24;
    std::size_t steps = 200;
    auto* ratio = app.add_subcommand("sweep-ratio", "P-bar / (S1 + S2) over a grid of (a1, a2), c = d = 1");
    ratio->add_option("--a-min", a_min, "Smallest cross gain")->capture_default_str();
    ratio->add_option("--a-max", a_max, "Largest cross gain")->capture_default_str();
    ratio->add_option("--steps,--resolution", steps, "Grid points per axis")->capture_default_str();

    double a2 = 0.125, a1_min = 0.00125, a1_max = 0.25;
    auto* pbar = app.add_subcommand("sweep-pbar", "P-bar as a function of a1 with a2 fixed, c = d = 1");
    pbar->add_option("--a2", a2, "Cross gain of the second channel")->capture_default_str();
    pbar->add_option("--a1-min", a1_min, "Start of the a1 range")->capture_default_str();
    pbar->add_option("--a1-max", a1_max, "End of the a1 range")->capture_default_str();
    pbar->add_option("--steps,--resolution", steps, "Number of a1 samples")->capture_default_str();

    auto* regions = app.add_subcommand("regions", "B-region outlines, power-region boundary and sub-region table");
    regions->add_option("instance", instance, "Instance JSON file")->required();
    regions->add_option("--resolution", resolution, "Samples per curve and grid size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : pgic::kExitInput;
    }

    std::unique_ptr<std::ofstream> file;
    if (!out_path.empty()) {
        file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
        if (!*file) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return pgic::kExitInput;
        }
    }
    std::ostream& out = file ? *file : std::cout;

    int rc = pgic::kExitInput;
    if (*check) rc = pgic::cmd_check(instance, out, std::cerr);
    else if (*solve) rc = pgic::cmd_solve(instance, solve_opts, out, std::cerr);
    else if (*ratio) rc = pgic::cmd_sweep_ratio(a_min, a_max, steps, out, std::cerr);
    else if (*pbar) rc = pgic::cmd_sweep_pbar(a2, a1_min, a1_max, steps, out, std::cerr);
    else if (*regions) rc = pgic::cmd_regions(instance, resolution, out, std::cerr);
    out.flush();
    return rc;
}
