// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file packet.hpp
 * @brief Temporal-stability algebra: evolution as a gamma-shift, and
 * overlaps between equal-s, equal-orientation states.
 *
 * The bound-state propagator multiplies the n-th expansion coefficient by
 * e^{it/2n^2}, which composes with the e^{i gamma/n^2} label factor as
 * gamma -> gamma + t/2. Evolution therefore never leaves the family; it
 * only moves the label, and the autocorrelation function is the squared
 * modulus of an overlap at shifted gamma.
 */

#pragma once

#include <cmath>
#include <complex>

#include "tscs/coefficients.hpp"
#include "tscs/detail/math.hpp"

namespace tscs {

/// Normalized overlap between two members of the family.
struct OverlapValue {
    std::complex<double> value;
    double modulus_sq;  // |value|^2, in [0, 1]
};

/// Labels after evolving for time t: (s, gamma + t/2, omega_bar).
inline PacketParams evolve_params(PacketParams p, double t) {
    p.gamma += t / 2.0;
    return p;
}

/// <s gamma1 Omega | s gamma2 Omega> = sum_n p_n e^{i(gamma1-gamma2)/n^2}.
/// Depends on gamma1 - gamma2 only; the orientation drops out because the
/// manifold states are orthogonal across n.
inline OverlapValue overlap(const CoefficientTable& table, double gamma1, double gamma2) {
    const double dg = gamma1 - gamma2;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const long double n = static_cast<long double>(table.n_lo + static_cast<std::int64_t>(i));
        const double phase = detail::reduced_phase(static_cast<long double>(dg), n * n);
        re += table.weights[i] * std::cos(phase);
        im += table.weights[i] * std::sin(phase);
    }
    return {{re, im}, re * re + im * im};
}

}  // namespace tscs
