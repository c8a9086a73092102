// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: hydrogen-packet coefficient tables, autocorrelation
// scans, moment summaries, dephasing analysis and consistency checks, all as
// plot-ready CSV.

#include <CLI11.hpp>

#include "tscs/cli.hpp"
#include "tscs/version.hpp"

namespace {

void add_common_options(CLI::App* cmd, tscs::RunConfig& cfg) {
    cmd->add_option("--s", cfg.s, "Packet parameter s (>= 0)")->capture_default_str();
    cmd->add_option("--gamma", cfg.gamma, "Phase label gamma")->capture_default_str();
    cmd->add_option("--threshold", cfg.threshold, "Relative truncation threshold, in (0,1)")
        ->capture_default_str();
    cmd->add_option("--t-max-periods", cfg.t_max_periods, "Scan length in Kepler periods")
        ->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "Number of grid samples (>= 2)")
        ->capture_default_str();
    cmd->add_option("--theta", cfg.theta, "Orientation theta in [0, pi]")->capture_default_str();
    cmd->add_option("--phi", cfg.phi, "Orientation phi (radians)")->capture_default_str();
    cmd->add_option("--psi", cfg.psi, "Orientation psi (radians)")->capture_default_str();
    cmd->add_option("--cutoff", cfg.cutoff, "Relative cutoff for significant-state counting")
        ->capture_default_str();
    cmd->add_option("--output,-o", cfg.output_path, "Output file path ('-' = stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporally stable hydrogen coherent states: tables, autocorrelation, dephasing"};
    app.set_version_flag("--version", std::string("tscs ") + tscs::version);
    app.require_subcommand(1);

    tscs::RunConfig cfg;
    struct Sub {
        tscs::Command command;
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {tscs::Command::coeffs, "coeffs", "Coefficient table: n, log_weight, weight"},
        {tscs::Command::autocorr, "autocorr", "Autocorrelation scan: t_atomic, t_over_kepler, C"},
        {tscs::Command::moments, "moments", "Distribution moments and significant-state count"},
        {tscs::Command::dephase, "dephase",
         "Level-spacing expansion and per-level phases after one Kepler period"},
        {tscs::Command::normcheck, "normcheck",
         "Residual of the closed-form normalization identity"},
        {tscs::Command::overlapcheck, "overlapcheck",
         "Max |C(t) - |overlap(gamma, gamma+t/2)|^2| over the scan grid"},
    };
    for (const Sub& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_common_options(cmd, cfg);
        cmd->callback([&cfg, &sub] { cfg.command = sub.command; });
    }

    CLI11_PARSE(app, argc, argv);
    return tscs::run(cfg);
}
