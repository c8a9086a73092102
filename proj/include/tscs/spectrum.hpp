// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "tscs/detail/math.hpp"

namespace tscs {

/// Level-spacing expansion E_{n+d} - E_n around a reference level n,
/// split into the harmonic (Kepler) term and the leading anharmonic
/// correction. All values in hartree.
///
/// For d = 0 every field is exactly zero. For fixed d the residual
/// exact - (linear + anharmonic) scales like d^3/n^5.
struct SpacingExpansion {
    double linear_term;      // d / n^3
    double anharmonic_term;  // -(3 d^2 / 2n) / n^3
    double exact;            // E_{n+d} - E_n
};

/// Bound-state energy -1/(2n^2) in hartree (atomic units throughout).
inline double energy(std::int64_t n) {
    if (n < 1) throw std::domain_error("energy: principal quantum number must be >= 1");
    const double nn = static_cast<double>(n);
    return -1.0 / (2.0 * nn * nn);
}

/// Classical orbital period 2*pi*n^3 of the level-n electron, atomic units.
inline double kepler_period(std::int64_t n_bar) {
    if (n_bar < 1) throw std::domain_error("kepler_period: principal quantum number must be >= 1");
    const double nn = static_cast<double>(n_bar);
    return detail::two_pi * nn * nn * nn;
}

/// Expansion of E_{n_bar+delta} - E_{n_bar}. delta may be negative;
/// n_bar + delta must still be a valid level.
inline SpacingExpansion spacing(std::int64_t n_bar, std::int64_t delta) {
    if (n_bar < 1 || n_bar + delta < 1)
        throw std::domain_error("spacing: both levels must have quantum number >= 1");
    if (delta == 0) return {0.0, 0.0, 0.0};
    const double nb = static_cast<double>(n_bar);
    const double d = static_cast<double>(delta);
    const double inv_cube = 1.0 / (nb * nb * nb);
    return {
        d * inv_cube,
        -(1.5 * d * d / nb) * inv_cube,
        energy(n_bar + delta) - energy(n_bar),
    };
}

/// Phase accumulated after time t by the anharmonic term of the spacing
/// expansion: t * (3 delta^2 / 2 n_bar) / n_bar^3, unreduced.
///
/// delta is real-valued here: this is an analysis tool, not a level index.
/// At t = 2*pi*n_bar^3 and delta = sqrt(n_bar/3) the result is exactly pi —
/// the half-turn that kills recurrences.
inline double anharmonic_phase(std::int64_t n_bar, double delta, double t) {
    if (n_bar < 1) throw std::domain_error("anharmonic_phase: n_bar must be >= 1");
    const long double nb = static_cast<long double>(n_bar);
    const long double ph = static_cast<long double>(t) * (1.5L * delta * delta / nb) / (nb * nb * nb);
    return static_cast<double>(ph);
}

/// Phase accumulated after time t by the linear (harmonic) term: t * delta / n_bar^3.
inline double linear_phase(std::int64_t n_bar, std::int64_t delta, double t) {
    if (n_bar < 1) throw std::domain_error("linear_phase: n_bar must be >= 1");
    const long double nb = static_cast<long double>(n_bar);
    return static_cast<double>(static_cast<long double>(t) * static_cast<long double>(delta) / (nb * nb * nb));
}

/// linear_phase reduced into [-pi, pi], with the reduction done in extended
/// precision so multi-million-radian accumulated phases keep ~1e-13 accuracy.
/// At t equal to one Kepler period of n_bar this is ~0 for every integer delta:
/// the harmonic part of the spectrum is commensurate and cannot dephase a packet.
inline double linear_phase_mod_2pi(std::int64_t n_bar, std::int64_t delta, double t) {
    if (n_bar < 1) throw std::domain_error("linear_phase_mod_2pi: n_bar must be >= 1");
    const long double nb = static_cast<long double>(n_bar);
    const long double raw = static_cast<long double>(t) * static_cast<long double>(delta) / (nb * nb * nb);
    return static_cast<double>(std::remainder(raw, detail::two_pi_l));
}

/// Principal value of an angle, (-pi, pi].
inline double principal_angle(double a) { return detail::principal_angle(a); }

}  // namespace tscs
