// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Command dispatch behind the tscs command-line tool.
 *
 * Every command renders its whole CSV payload into memory first and writes
 * it in one piece, so an identical config always produces byte-identical
 * output and an invalid config never produces a partial file.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tscs/angular.hpp"
#include "tscs/autocorr.hpp"
#include "tscs/coefficients.hpp"
#include "tscs/packet.hpp"
#include "tscs/spectrum.hpp"
#include "tscs/version.hpp"

namespace tscs {

enum class Command { coeffs, autocorr, moments, dephase, normcheck, overlapcheck };

inline const char* command_name(Command c) {
    switch (c) {
        case Command::coeffs: return "coeffs";
        case Command::autocorr: return "autocorr";
        case Command::moments: return "moments";
        case Command::dephase: return "dephase";
        case Command::normcheck: return "normcheck";
        case Command::overlapcheck: return "overlapcheck";
    }
    return "?";
}

/// Fully resolved run configuration. Validated as a whole before any
/// computation starts.
struct RunConfig {
    Command command = Command::coeffs;
    double s = 1.0;
    double gamma = 0.0;
    double threshold = 1e-100;
    double t_max_periods = 3.0;
    std::int64_t samples = 6000;
    double theta = detail::pi / 2.0;
    double phi = 0.0;
    double psi = 0.0;
    double cutoff = std::exp(-100.0);
    std::string output_path;  // empty or "-": standard output
};

namespace detail {

inline void validate(const RunConfig& cfg) {
    if (!(cfg.s >= 0.0)) throw std::domain_error("--s must be >= 0");
    if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0))
        throw std::domain_error("--threshold must lie in (0, 1)");
    if (!(cfg.t_max_periods > 0.0)) throw std::domain_error("--t-max-periods must be > 0");
    if (cfg.samples < 2) throw std::domain_error("--samples must be >= 2");
    if (!(cfg.cutoff > 0.0 && cfg.cutoff <= 1.0))
        throw std::domain_error("--cutoff must lie in (0, 1]");
    if (!std::isfinite(cfg.gamma)) throw std::domain_error("--gamma must be finite");
    OmegaBar check(cfg.theta, cfg.phi, cfg.psi);  // throws on bad theta
    (void)check;
}

inline std::string meta_line(const RunConfig& cfg) {
    std::ostringstream out;
    out << "# tscs " << version << " command=" << command_name(cfg.command)
        << " s=" << format_double(cfg.s) << " gamma=" << format_double(cfg.gamma)
        << " threshold=" << format_double(cfg.threshold)
        << " t_max_periods=" << format_double(cfg.t_max_periods) << " samples=" << cfg.samples
        << " theta=" << format_double(cfg.theta) << " phi=" << format_double(cfg.phi)
        << " psi=" << format_double(cfg.psi) << " cutoff=" << format_double(cfg.cutoff)
        << " output=" << (cfg.output_path.empty() ? "-" : cfg.output_path) << '\n';
    return out.str();
}

inline std::int64_t central_level(double s) {
    return std::max<std::int64_t>(1, std::llround(s * s));
}

inline void render_coeffs(const RunConfig& cfg, std::ostream& out) {
    write_csv(out, weight_table(cfg.s, cfg.threshold));
}

inline void render_autocorr(const RunConfig& cfg, std::ostream& out) {
    const CoefficientTable table = weight_table(cfg.s, cfg.threshold);
    const double t_kepler = kepler_period(central_level(cfg.s));
    write_csv(out, scan(table, cfg.t_max_periods * t_kepler, cfg.samples));
}

inline void render_moments(const RunConfig& cfg, std::ostream& out) {
    const Moments m = moments(weight_table(cfg.s, cfg.threshold));
    const std::int64_t sig = cfg.s > 0.0 ? significant_count(cfg.s, cfg.cutoff) : 1;
    out << "s,mean,variance,argmax,asymptotic_variance,significant_count\n"
        << format_double(cfg.s) << ',' << format_double(m.mean) << ','
        << format_double(m.variance) << ',' << m.argmax << ','
        << format_double(m.asymptotic_variance) << ',' << sig << '\n';
}

inline void render_dephase(const RunConfig& cfg, std::ostream& out) {
    const std::int64_t n_bar = central_level(cfg.s);
    const double t_kepler = kepler_period(n_bar);
    const double half_turn_delta = std::sqrt(static_cast<double>(n_bar) / 3.0);
    out << "# n_bar=" << n_bar << " kepler_period=" << format_double(t_kepler)
        << " half_turn_delta=" << format_double(half_turn_delta)
        << " anharmonic_phase_at_half_turn="
        << format_double(anharmonic_phase(n_bar, half_turn_delta, t_kepler)) << '\n';
    out << "delta,exact,linear_term,anharmonic_term,linear_phase_mod_2pi,anharmonic_phase\n";

    const std::int64_t d_max = std::min<std::int64_t>(
        n_bar - 1, static_cast<std::int64_t>(std::ceil(3.0 * std::sqrt(static_cast<double>(n_bar)))));
    for (std::int64_t d = -d_max; d <= d_max; ++d) {
        const SpacingExpansion se = spacing(n_bar, d);
        out << d << ',' << format_double(se.exact) << ',' << format_double(se.linear_term) << ','
            << format_double(se.anharmonic_term) << ','
            << format_double(linear_phase_mod_2pi(n_bar, d, t_kepler)) << ','
            << format_double(anharmonic_phase(n_bar, static_cast<double>(d), t_kepler)) << '\n';
    }
}

inline void render_normcheck(const RunConfig& cfg, std::ostream& out) {
    out << "s,norm_factor,relative_error\n"
        << format_double(cfg.s) << ',' << format_double(norm_factor(cfg.s)) << ','
        << format_double(norm_identity_residual(cfg.s)) << '\n';
}

inline void render_overlapcheck(const RunConfig& cfg, std::ostream& out) {
    const CoefficientTable table = weight_table(cfg.s, cfg.threshold);
    const double t_max = cfg.t_max_periods * kepler_period(central_level(cfg.s));
    const double dt = t_max / static_cast<double>(cfg.samples - 1);
    double max_diff = 0.0;
    for (std::int64_t i = 0; i < cfg.samples; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double c = evaluate(table, t);
        const double o = overlap(table, cfg.gamma, cfg.gamma + t / 2.0).modulus_sq;
        max_diff = std::max(max_diff, std::fabs(c - o));
    }
    out << "s,gamma,samples,t_max_atomic,max_abs_difference\n"
        << format_double(cfg.s) << ',' << format_double(cfg.gamma) << ',' << cfg.samples << ','
        << format_double(t_max) << ',' << format_double(max_diff) << '\n';
}

inline std::string render(const RunConfig& cfg) {
    std::ostringstream out;
    out << meta_line(cfg);
    switch (cfg.command) {
        case Command::coeffs: render_coeffs(cfg, out); break;
        case Command::autocorr: render_autocorr(cfg, out); break;
        case Command::moments: render_moments(cfg, out); break;
        case Command::dephase: render_dephase(cfg, out); break;
        case Command::normcheck: render_normcheck(cfg, out); break;
        case Command::overlapcheck: render_overlapcheck(cfg, out); break;
    }
    return out.str();
}

}  // namespace detail

/// Validate, compute, and write one command's CSV. Returns 0 on success,
/// 2 on a usage (validation) error, 1 on an I/O error.
inline int run(const RunConfig& cfg, std::ostream& err = std::cerr) {
    std::string payload;
    try {
        detail::validate(cfg);
        payload = detail::render(cfg);
    } catch (const std::exception& e) {
        err << "tscs: error: " << e.what() << '\n';
        return 2;
    }

    if (cfg.output_path.empty() || cfg.output_path == "-") {
        std::cout << payload;
        std::cout.flush();
        return 0;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
        err << "tscs: error: cannot open output path '" << cfg.output_path << "'\n";
        return 1;
    }
    file << payload;
    file.flush();
    if (!file) {
        err << "tscs: error: failed writing to '" << cfg.output_path << "'\n";
        return 1;
    }
    return 0;
}

}  // namespace tscs
