// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Minimal library walkthrough: build two packets, compare their weight
// distributions, and show how the larger one loses its recurrences.

#include <cstdio>

#include "tscs/autocorr.hpp"
#include "tscs/coefficients.hpp"
#include "tscs/spectrum.hpp"

int main() {
    for (double s : {5.0, 20.0}) {
        const auto table = tscs::weight_table(s);
        const auto m = tscs::moments(table);
        const auto rec = tscs::recurrence_summary(s, 3, 2000);
        std::printf("s = %-4g  levels [%lld, %lld]  mode n = %lld  <n> = %.3f  var = %.3f\n",
                    s, static_cast<long long>(table.n_lo), static_cast<long long>(table.n_hi),
                    static_cast<long long>(m.argmax), m.mean, m.variance);
        std::printf("          Kepler period %.4g a.u.; best recurrence C = %.4f at t = %.2f T_K\n",
                    tscs::kepler_period(static_cast<std::int64_t>(std::llround(s * s))),
                    rec.max_height, rec.time_in_periods);
    }
    return 0;
}
