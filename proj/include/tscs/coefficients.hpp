// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file coefficients.hpp
 * @brief Weight distribution p_n of a temporally stable packet, in log space.
 *
 * The normalized weight of the n-th bound manifold is
 *
 *     p_n = e^{-s^2} n^2 s^{2(n-1)} / ((n-1)! * [(s^2+1)^2 + s^2])
 *
 * For s = 20 the raw numerator spans >1000 orders of magnitude, so every
 * weight is built as ln p_n from log-gamma and only exponentiated after a
 * shift by the maximum. The table keeps the contiguous window of n whose
 * relative weight clears a truncation threshold (default 1e-100) and
 * renormalizes the retained weights to unit sum.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "tscs/detail/math.hpp"
#include "tscs/omega_bar.hpp"

namespace tscs {

/// Continuous labels (s, gamma, omega_bar) of a temporally stable state.
/// gamma and omega_bar do not influence the weights p_n; they are carried
/// for the packet-evolution algebra.
struct PacketParams {
    double s;
    double gamma;
    OmegaBar omega_bar;

    PacketParams(double s_, double gamma_, OmegaBar omega_bar_ = {})
        : s(s_), gamma(gamma_), omega_bar(omega_bar_) {
        if (!(s >= 0.0)) throw std::domain_error("PacketParams: s must be >= 0");
    }
};

/// Truncated, normalized weight distribution over n in [n_lo, n_hi].
/// log_weights[i] = ln p_{n_lo + i}; weights caches exp(log_weights).
struct CoefficientTable {
    double s = 0.0;
    std::int64_t n_lo = 1;
    std::int64_t n_hi = 1;
    std::vector<double> log_weights;
    std::vector<double> weights;
    double log_norm_factor = 0.0;  // ln[(s^2+1)^2 + s^2]
    double threshold = 0.0;        // relative cutoff used for truncation (0: none)

    std::size_t size() const { return weights.size(); }
    bool contains(std::int64_t n) const { return n >= n_lo && n <= n_hi; }

    std::size_t index_of(std::int64_t n) const {
        if (!contains(n)) throw std::out_of_range("CoefficientTable: n outside window");
        return static_cast<std::size_t>(n - n_lo);
    }
    double weight_at(std::int64_t n) const { return weights[index_of(n)]; }
    double log_weight_at(std::int64_t n) const { return log_weights[index_of(n)]; }
};

/// Mean, variance and mode of a coefficient table, plus the large-s
/// variance prediction s^2 + 6 quoted for the Poissonian limit.
struct Moments {
    double mean;
    double variance;
    std::int64_t argmax;
    double asymptotic_variance;
};

/// Normalization factor (s^2+1)^2 + s^2 of the packet expansion.
inline double norm_factor(double s) {
    if (!(s >= 0.0)) throw std::domain_error("norm_factor: s must be >= 0");
    const double u = s * s;
    return (u + 1.0) * (u + 1.0) + u;
}

/// ln of norm_factor, stable for any s.
inline double log_norm_factor(double s) {
    if (!(s >= 0.0)) throw std::domain_error("log_norm_factor: s must be >= 0");
    return static_cast<double>(detail::log_norm_factor_l(static_cast<long double>(s)));
}

/// ln p_n, computed entirely in log space:
///   -s^2 + 2 ln n + 2(n-1) ln s - lnGamma(n) - ln[(s^2+1)^2+s^2]
///
/// The linear combination runs in 80-bit precision: near s = 20 the
/// individual terms reach ~5e3 while the result sits near -4, and plain
/// double evaluation would leave ~1e-12 of cancellation noise — enough to
/// spoil the n^2 s^2 / n^3-ratio identity between neighbouring weights.
inline double log_weight(std::int64_t n, double s) {
    if (n < 1) throw std::domain_error("log_weight: n must be >= 1");
    if (!(s > 0.0))
        throw std::domain_error("log_weight: requires s > 0 (s = 0 is weight_table's degenerate path)");
    const long double ls = static_cast<long double>(s);
    const long double nl = static_cast<long double>(n);
    const long double lw = -ls * ls + 2.0L * std::log(nl) +
                           2.0L * static_cast<long double>(n - 1) * std::log(ls) -
                           std::lgamma(nl) - detail::log_norm_factor_l(ls);
    return static_cast<double>(lw);
}

namespace detail {

// p_{n+1}/p_n = (n+1)^2 s^2 / n^3; strictly decreasing in n.
inline double weight_ratio(std::int64_t n, double s) {
    const double nd = static_cast<double>(n);
    return (nd + 1.0) * (nd + 1.0) * s * s / (nd * nd * nd);
}

// Smallest n whose ratio to the next weight drops below 1, i.e. the mode.
inline std::int64_t weight_mode(double s) {
    std::int64_t n = std::max<std::int64_t>(1, std::llround(s * s));
    while (weight_ratio(n, s) >= 1.0) ++n;
    while (n > 1 && weight_ratio(n - 1, s) < 1.0) --n;
    return n;
}

}  // namespace detail

/// Build the truncated table for packet parameter s: locate the mode via the
/// ratio recursion, expand the window outward until the relative weight falls
/// below `threshold`, then renormalize the retained weights to unit sum.
/// s = 0 yields the single-entry table {n=1: p=1}.
inline CoefficientTable weight_table(double s, double threshold = 1e-100) {
    if (!(s >= 0.0)) throw std::domain_error("weight_table: s must be >= 0");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::domain_error("weight_table: threshold must lie in (0, 1)");

    CoefficientTable table;
    table.s = s;
    table.threshold = threshold;
    table.log_norm_factor = log_norm_factor(s);

    if (s == 0.0) {
        table.n_lo = table.n_hi = 1;
        table.log_weights = {0.0};
        table.weights = {1.0};
        return table;
    }

    const std::int64_t mode = detail::weight_mode(s);
    const double lw_mode = log_weight(mode, s);
    const double cut = lw_mode + std::log(threshold);

    std::int64_t lo = mode;
    while (lo > 1 && log_weight(lo - 1, s) >= cut) --lo;
    std::int64_t hi = mode;
    while (log_weight(hi + 1, s) >= cut) ++hi;

    table.n_lo = lo;
    table.n_hi = hi;
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    table.log_weights.resize(count);
    table.weights.resize(count);

    long double acc = 0.0L;
    for (std::size_t i = 0; i < count; ++i) {
        table.log_weights[i] = log_weight(lo + static_cast<std::int64_t>(i), s);
        acc += std::exp(static_cast<long double>(table.log_weights[i]) - lw_mode);
    }
    const double log_z = lw_mode + static_cast<double>(std::log(acc));
    for (std::size_t i = 0; i < count; ++i) {
        table.log_weights[i] -= log_z;
        table.weights[i] = std::exp(table.log_weights[i]);
    }

    // One multiplicative correction pass; after it the weights sum to 1 up
    // to the rounding of the final division.
    detail::CompensatedSum total;
    for (double w : table.weights) total.add(w);
    const double scale = total.value();
    const double log_scale = std::log(scale);
    for (std::size_t i = 0; i < count; ++i) {
        table.weights[i] /= scale;
        table.log_weights[i] -= log_scale;
    }
    return table;
}

/// Convenience overload: gamma and omega_bar never enter the weights, so a
/// full label set builds the same table as its s alone.
inline CoefficientTable weight_table(const PacketParams& params, double threshold = 1e-100) {
    return weight_table(params.s, threshold);
}

/// Table with explicitly given weights on the window starting at n_lo
/// (normalized to unit sum). Meant for toy spectra and tests; truncation
/// metadata is marked as "none".
inline CoefficientTable make_table(double s, std::int64_t n_lo, std::vector<double> weights) {
    if (!(s >= 0.0)) throw std::domain_error("make_table: s must be >= 0");
    if (n_lo < 1) throw std::domain_error("make_table: n_lo must be >= 1");
    if (weights.empty()) throw std::domain_error("make_table: weights must be nonempty");

    detail::CompensatedSum total;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::domain_error("make_table: weights must be positive and finite");
        total.add(w);
    }
    CoefficientTable table;
    table.s = s;
    table.threshold = 0.0;
    table.log_norm_factor = log_norm_factor(s);
    table.n_lo = n_lo;
    table.n_hi = n_lo + static_cast<std::int64_t>(weights.size()) - 1;
    table.weights = std::move(weights);
    table.log_weights.resize(table.weights.size());
    for (std::size_t i = 0; i < table.weights.size(); ++i) {
        table.weights[i] /= total.value();
        table.log_weights[i] = std::log(table.weights[i]);
    }
    return table;
}

/// Weighted mean/variance over the window plus the mode (smallest n on
/// exact ties). Variance is accumulated as sum p (n - mean)^2, which cannot
/// go negative.
inline Moments moments(const CoefficientTable& table) {
    if (table.size() == 0) throw std::domain_error("moments: empty table");

    detail::CompensatedSum mean_acc;
    double best = -1.0;
    std::int64_t argmax = table.n_lo;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double n = static_cast<double>(table.n_lo + static_cast<std::int64_t>(i));
        mean_acc.add(table.weights[i] * n);
        if (table.weights[i] > best) {
            best = table.weights[i];
            argmax = table.n_lo + static_cast<std::int64_t>(i);
        }
    }
    const double mean = mean_acc.value();

    detail::CompensatedSum var_acc;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double n = static_cast<double>(table.n_lo + static_cast<std::int64_t>(i));
        var_acc.add(table.weights[i] * (n - mean) * (n - mean));
    }
    return {mean, var_acc.value(), argmax, table.s * table.s + 6.0};
}

/// Number of levels whose weight is at least `cutoff` times the maximum
/// weight. The cutoff convention for "significant" is deliberately a
/// parameter; e^-100 reproduces the ~100 (s=5) and ~600 (s=20) counts.
inline std::int64_t significant_count(double s, double cutoff = std::exp(-100.0)) {
    if (!(s > 0.0)) throw std::domain_error("significant_count: s must be > 0");
    if (!(cutoff > 0.0 && cutoff <= 1.0))
        throw std::domain_error("significant_count: cutoff must lie in (0, 1]");

    const CoefficientTable table = weight_table(s, std::min(cutoff, 1e-100));
    const double max_w = *std::max_element(table.weights.begin(), table.weights.end());
    const double bound = cutoff * max_w;
    std::int64_t count = 0;
    for (double w : table.weights)
        if (w >= bound) ++count;
    return count;
}

/// Relative residual of the closed-form normalization identity
///   e^{-s^2} sum_n n^2 s^{2(n-1)}/(n-1)!  =  (s^2+1)^2 + s^2
/// with the left side summed in log space over the full significant support.
inline double norm_identity_residual(double s) {
    if (!(s >= 0.0)) throw std::domain_error("norm_identity_residual: s must be >= 0");
    if (s == 0.0) return 0.0;

    const CoefficientTable window = weight_table(s, 1e-250);
    // Unnormalized log terms tau_n = ln p_n + ln norm_factor; summing
    // exp(tau - tau_max) reproduces the left side over the window.
    std::vector<double> tau(window.size());
    double tau_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < window.size(); ++i) {
        const std::int64_t n = window.n_lo + static_cast<std::int64_t>(i);
        tau[i] = log_weight(n, s) + window.log_norm_factor;
        tau_max = std::max(tau_max, tau[i]);
    }
    long double acc = 0.0L;
    for (double t : tau) acc += std::exp(static_cast<long double>(t) - tau_max);
    const long double lhs = std::exp(static_cast<long double>(tau_max)) * acc;
    const long double rhs = static_cast<long double>(norm_factor(s));
    return static_cast<double>(std::fabs(lhs - rhs) / rhs);
}

/// CSV export (columns n, log_weight, weight) for plotting the coefficient
/// distribution. No header comment; callers prepend their own metadata.
inline void write_csv(std::ostream& out, const CoefficientTable& table) {
    out << "n,log_weight,weight\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << (table.n_lo + static_cast<std::int64_t>(i)) << ','
            << detail::format_double(table.log_weights[i]) << ','
            << detail::format_double(table.weights[i]) << '\n';
    }
}

}  // namespace tscs
