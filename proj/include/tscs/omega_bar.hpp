// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include "tscs/detail/math.hpp"

namespace tscs {

/// Orientation triple (theta, phi, psi) labelling an angular superposition.
/// theta must lie in [0, pi]; phi and psi are folded into (-pi, pi] on
/// construction.
struct OmegaBar {
    double theta;
    double phi;
    double psi;

    OmegaBar(double theta_, double phi_, double psi_)
        : theta(theta_),
          phi(detail::principal_angle(phi_)),
          psi(detail::principal_angle(psi_)) {
        if (!(theta >= 0.0 && theta <= detail::pi))
            throw std::domain_error("OmegaBar: theta must lie in [0, pi]");
    }

    OmegaBar() : OmegaBar(detail::pi / 2.0, 0.0, 0.0) {}
};

}  // namespace tscs
