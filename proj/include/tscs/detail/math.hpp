// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

namespace tscs::detail {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr long double pi_l = 3.141592653589793238462643383279502884L;
inline constexpr long double two_pi_l = 2.0L * pi_l;

// numer/denom reduced into [-pi, pi], carried out in extended precision.
// Raw phase arguments reach ~1e9 a.u.; reducing after a double division
// would lose ~|arg|*eps of absolute phase, which at that magnitude exceeds
// the accuracy the autocorrelation sums need.
inline double reduced_phase(long double numer, long double denom) {
    return static_cast<double>(std::remainder(numer / denom, two_pi_l));
}

// Principal angle in (-pi, pi].
inline double principal_angle(double a) {
    double r = std::remainder(a, two_pi);
    if (r <= -pi) r = pi;
    return r;
}

// Compensated accumulation (Neumaier variant).
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

// ln[(s^2+1)^2 + s^2] without forming the quartic when it would overflow.
inline long double log_norm_factor_l(long double s) {
    const long double u = s * s;
    const long double v = (u + 1.0L) * (u + 1.0L) + u;
    if (std::isfinite(v)) return std::log(v);
    return 2.0L * std::log(u) + std::log1p(3.0L / u + 1.0L / (u * u));
}

// Shortest round-trip decimal form; keeps CSV output byte-reproducible.
inline std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace tscs::detail
