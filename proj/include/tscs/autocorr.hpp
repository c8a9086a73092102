// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file autocorr.hpp
 * @brief Autocorrelation function C(t) of a packet, grids and peak analysis.
 *
 * C(t) = |sum_n p_n e^{it/2n^2}|^2 with the normalized table weights, so
 * C(0) = 1 with no external prefactor. Per-term phases are reduced modulo
 * 2*pi in extended precision before the trig calls: at s = 20 the scan runs
 * to t ~ 1e9 a.u., where a raw double division already carries more than
 * 1e-11 of phase error.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "tscs/coefficients.hpp"
#include "tscs/detail/math.hpp"
#include "tscs/spectrum.hpp"

namespace tscs {

/// C(t) sampled on a uniform grid, with the Kepler period of the packet's
/// central level round(s^2) (clamped to >= 1) as metadata.
struct AutocorrSeries {
    std::vector<double> times;   // atomic units
    std::vector<double> values;  // dimensionless, in [0, 1]
    double kepler_period;
    double s;
};

/// A strict local maximum of a sampled series.
struct Peak {
    double time;
    double height;
};

/// Detected maxima in time order.
struct PeakList {
    std::vector<Peak> peaks;
};

/// Highest recurrence found after the initial decay, time in Kepler periods.
struct RecurrenceSummary {
    double max_height;
    double time_in_periods;
};

/// Autocorrelation at time t (any real t; even in t).
inline double evaluate(const CoefficientTable& table, double t) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const long double n = static_cast<long double>(table.n_lo + static_cast<std::int64_t>(i));
        const double phase = detail::reduced_phase(static_cast<long double>(t), 2.0L * n * n);
        re += table.weights[i] * std::cos(phase);
        im += table.weights[i] * std::sin(phase);
    }
    return re * re + im * im;
}

/// Sample C on `samples` uniformly spaced points of [0, t_max] (endpoints
/// included). Each point is independent; the loop fills pre-assigned slots,
/// so the output is deterministic regardless of evaluation order.
inline AutocorrSeries scan(const CoefficientTable& table, double t_max, std::int64_t samples) {
    if (samples < 2) throw std::domain_error("scan: need at least 2 samples");
    if (!(t_max > 0.0)) throw std::domain_error("scan: t_max must be > 0");

    AutocorrSeries series;
    series.s = table.s;
    series.kepler_period =
        kepler_period(std::max<std::int64_t>(1, std::llround(table.s * table.s)));
    series.times.resize(static_cast<std::size_t>(samples));
    series.values.resize(static_cast<std::size_t>(samples));
    const double dt = t_max / static_cast<double>(samples - 1);
    for (std::int64_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) * dt;
        series.times[static_cast<std::size_t>(i)] = t;
        series.values[static_cast<std::size_t>(i)] = evaluate(table, t);
    }
    return series;
}

/// Strict 3-point local maxima with height >= min_height and time >
/// skip_initial, in time order. No sub-grid interpolation.
inline PeakList find_peaks(const AutocorrSeries& series, double min_height, double skip_initial) {
    if (series.values.empty()) throw std::domain_error("find_peaks: empty series");
    if (!(min_height >= 0.0 && min_height <= 1.0))
        throw std::domain_error("find_peaks: min_height must lie in [0, 1]");

    PeakList list;
    for (std::size_t i = 1; i + 1 < series.values.size(); ++i) {
        const double v = series.values[i];
        if (v > series.values[i - 1] && v > series.values[i + 1] &&
            series.times[i] > skip_initial && v >= min_height)
            list.peaks.push_back({series.times[i], v});
    }
    return list;
}

/// Build the table for s, scan n_periods Kepler periods, and report the
/// highest peak after t > 0.1 T_K. {0, 0} if no peak survives.
inline RecurrenceSummary recurrence_summary(double s, std::int64_t n_periods,
                                            std::int64_t samples_per_period) {
    if (!(s > 0.0)) throw std::domain_error("recurrence_summary: s must be > 0");
    if (n_periods < 1) throw std::domain_error("recurrence_summary: n_periods must be >= 1");
    if (samples_per_period < 2)
        throw std::domain_error("recurrence_summary: need >= 2 samples per period");

    const CoefficientTable table = weight_table(s);
    const double t_kepler = kepler_period(std::max<std::int64_t>(1, std::llround(s * s)));
    const AutocorrSeries series =
        scan(table, static_cast<double>(n_periods) * t_kepler, n_periods * samples_per_period);
    const PeakList peaks = find_peaks(series, 0.0, 0.1 * t_kepler);

    RecurrenceSummary best{0.0, 0.0};
    for (const Peak& p : peaks.peaks) {
        if (p.height > best.max_height) {
            best.max_height = p.height;
            best.time_in_periods = p.time / t_kepler;
        }
    }
    return best;
}

/// CSV export (columns t_atomic, t_over_kepler, C). No header comment;
/// callers prepend their own metadata.
inline void write_csv(std::ostream& out, const AutocorrSeries& series) {
    out << "t_atomic,t_over_kepler,C\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        out << detail::format_double(series.times[i]) << ','
            << detail::format_double(series.times[i] / series.kepler_period) << ','
            << detail::format_double(series.values[i]) << '\n';
    }
}

}  // namespace tscs
