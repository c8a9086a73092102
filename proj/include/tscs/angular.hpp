// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file angular.hpp
 * @brief Angular superposition |n, omega_bar> over one degenerate n-manifold.
 *
 * The (l, m) component carries amplitude
 *
 *   [(2l+1)! / ((l+m)!(l-m)!)]^{1/2} (sin th/2)^{l-m} (cos th/2)^{l+m}
 *       * e^{i(m*phi + l*psi)}
 *
 * whose squared norm summed over the manifold collapses to n^2 for every
 * orientation — the binomial identity (sin^2 + cos^2)^{2l} = 1.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "tscs/detail/math.hpp"
#include "tscs/omega_bar.hpp"

namespace tscs {

/// One (n, l, m) component of the angular superposition.
struct AngularAmplitude {
    std::int64_t n;
    std::int64_t l;
    std::int64_t m;
    std::complex<double> amplitude;
};

/// Amplitude of |n l m> inside |n omega_bar>. Factorial ratios go through
/// log-gamma; (2l+1)! alone would overflow past l = 85.
inline std::complex<double> angular_amplitude(std::int64_t n, std::int64_t l, std::int64_t m,
                                              const OmegaBar& omega_bar) {
    if (n < 1) throw std::domain_error("angular_amplitude: n must be >= 1");
    if (l < 0 || l > n - 1) throw std::domain_error("angular_amplitude: need 0 <= l <= n-1");
    if (m < -l || m > l) throw std::domain_error("angular_amplitude: need |m| <= l");

    const double half = omega_bar.theta / 2.0;
    const double sin_h = std::sin(half);
    const double cos_h = std::cos(half);

    // Zero base with positive exponent kills the term; zero exponent leaves 1.
    if (sin_h == 0.0 && l != m) return {0.0, 0.0};
    if (cos_h == 0.0 && l != -m) return {0.0, 0.0};

    long double log_mag =
        0.5L * (std::lgamma(static_cast<long double>(2 * l + 2)) -
                std::lgamma(static_cast<long double>(l + m + 1)) -
                std::lgamma(static_cast<long double>(l - m + 1)));
    if (l != m) log_mag += static_cast<long double>(l - m) * std::log(static_cast<long double>(sin_h));
    if (l != -m) log_mag += static_cast<long double>(l + m) * std::log(static_cast<long double>(cos_h));

    const double mag = static_cast<double>(std::exp(log_mag));
    const double arg = static_cast<double>(m) * omega_bar.phi + static_cast<double>(l) * omega_bar.psi;
    return {mag * std::cos(arg), mag * std::sin(arg)};
}

/// Direct double sum of |amplitude|^2 over the n-manifold. Equals n^2
/// independent of orientation.
inline double manifold_norm(std::int64_t n, const OmegaBar& omega_bar) {
    if (n < 1) throw std::domain_error("manifold_norm: n must be >= 1");
    detail::CompensatedSum sum;
    for (std::int64_t l = 0; l <= n - 1; ++l)
        for (std::int64_t m = -l; m <= l; ++m)
            sum.add(std::norm(angular_amplitude(n, l, m, omega_bar)));
    return sum.value();
}

}  // namespace tscs
