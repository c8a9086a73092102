// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tscs/autocorr.hpp"
#include "tscs/spectrum.hpp"

using Catch::Approx;

namespace {

// random contiguous toy table with <= 12 states
tscs::CoefficientTable random_small_table(std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> lo(1, 50);
    std::uniform_int_distribution<int> width(1, 12);
    std::uniform_real_distribution<double> mass(0.05, 1.0);
    std::vector<double> w(static_cast<std::size_t>(width(rng)));
    for (double& x : w) x = mass(rng);
    return tscs::make_table(1.0, lo(rng), std::move(w));
}

}  // namespace

TEST_CASE("evaluate at t = 0 and the stationary packet", "[autocorr]") {
    for (double s : {0.5, 5.0, 20.0})
        CHECK(tscs::evaluate(tscs::weight_table(s), 0.0) == Approx(1.0).margin(1e-12));

    const auto stationary = tscs::weight_table(0.0);
    for (double t : {0.0, 1.0, 1e3, 1e8})
        CHECK(tscs::evaluate(stationary, t) == Approx(1.0).margin(1e-12));
}

TEST_CASE("two-level toy packet has the analytic beat", "[autocorr]") {
    const auto toy = tscs::make_table(1.0, 1, {0.5, 0.5});
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> time(0.0, 200.0);
    for (int i = 0; i < 100; ++i) {
        const double t = time(rng);
        const double expected = 0.5 + 0.5 * std::cos(3.0 * t / 8.0);
        CHECK(tscs::evaluate(toy, t) == Approx(expected).margin(1e-12));
    }
}

TEST_CASE("evaluate matches the extended-precision brute force", "[autocorr]") {
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> time(0.0, 1e4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto table = random_small_table(rng);
        for (int i = 0; i < 25; ++i) {
            const double t = time(rng);
            CHECK(tscs::evaluate(table, t) ==
                  Approx(oracles::brute_force_autocorr(table, t)).margin(1e-12));
        }
    }
}

TEST_CASE("C is even in t", "[autocorr]") {
    const auto table = tscs::weight_table(5.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> time(0.0, 3.0 * tscs::kepler_period(25));
    for (int i = 0; i < 100; ++i) {
        const double t = time(rng);
        CHECK(tscs::evaluate(table, -t) == Approx(tscs::evaluate(table, t)).margin(1e-14));
    }
}

TEST_CASE("scan grid and metadata", "[autocorr]") {
    const auto table = tscs::weight_table(5.0);
    CHECK_THROWS_AS(tscs::scan(table, 10.0, 1), std::domain_error);
    CHECK_THROWS_AS(tscs::scan(table, 0.0, 100), std::domain_error);

    const auto series = tscs::scan(table, 10.0, 11);
    REQUIRE(series.times.size() == 11);
    CHECK(series.times.front() == 0.0);
    CHECK(series.times.back() == Approx(10.0).epsilon(1e-15));
    CHECK(series.times[3] == Approx(3.0).epsilon(1e-15));
    CHECK(series.values.front() == Approx(1.0).margin(1e-12));
    CHECK(series.kepler_period == Approx(tscs::kepler_period(25)).epsilon(1e-15));
    CHECK(series.s == 5.0);

    SECTION("values stay inside [0, 1] up to rounding") {
        const auto longer = tscs::scan(table, 3.0 * series.kepler_period, 2000);
        for (double v : longer.values) {
            CHECK(v >= -1e-12);
            CHECK(v <= 1.0 + 1e-12);
        }
    }

    SECTION("kepler metadata clamps the central level to 1 for tiny s") {
        const auto small = tscs::scan(tscs::weight_table(0.5), 10.0, 16);
        CHECK(small.kepler_period == Approx(2.0 * M_PI).epsilon(1e-15));
    }

    SECTION("deterministic: identical scans are bit-identical") {
        const auto a = tscs::scan(table, 1000.0, 512);
        const auto b = tscs::scan(table, 1000.0, 512);
        CHECK(a.values == b.values);
        CHECK(a.times == b.times);
    }
}

TEST_CASE("scan of the toy packet returns to 1 after its beat period", "[autocorr]") {
    const auto toy = tscs::make_table(1.0, 1, {0.5, 0.5});
    const double period = 16.0 * M_PI / 3.0;
    const auto series = tscs::scan(toy, period, 4001);
    CHECK(series.values.back() == Approx(1.0).margin(1e-6));
}

TEST_CASE("find_peaks on the analytic beat", "[autocorr]") {
    const auto toy = tscs::make_table(1.0, 1, {0.5, 0.5});
    const double period = 16.0 * M_PI / 3.0;
    const auto series = tscs::scan(toy, 3.0 * period, 12000);
    const auto peaks = tscs::find_peaks(series, 0.5, 0.0);

    REQUIRE(peaks.peaks.size() == 2);  // maxima at t = period and 2*period; endpoints excluded
    const double step = series.times[1] - series.times[0];
    for (std::size_t k = 0; k < peaks.peaks.size(); ++k) {
        CHECK(peaks.peaks[k].height == Approx(1.0).margin(1e-5));
        CHECK(std::fabs(peaks.peaks[k].time - static_cast<double>(k + 1) * period) <= step);
    }

    SECTION("times strictly increasing") {
        for (std::size_t i = 1; i < peaks.peaks.size(); ++i)
            CHECK(peaks.peaks[i].time > peaks.peaks[i - 1].time);
    }

    SECTION("argument checks") {
        CHECK_THROWS_AS(tscs::find_peaks(series, -0.5, 0.0), std::domain_error);
        CHECK_THROWS_AS(tscs::find_peaks(series, 1.5, 0.0), std::domain_error);
        tscs::AutocorrSeries empty;
        CHECK_THROWS_AS(tscs::find_peaks(empty, 0.5, 0.0), std::domain_error);
    }
}

TEST_CASE("dispersion: partial recurrences shrink as s grows", "[autocorr]") {
    const auto t5 = tscs::weight_table(5.0);
    const double tk5 = tscs::kepler_period(25);
    const auto series5 = tscs::scan(t5, 3.0 * tk5, 6000);

    SECTION("s = 5: small recurrence peaks exist") {
        const auto peaks = tscs::find_peaks(series5, 0.05, 0.5 * tk5);
        CHECK(!peaks.peaks.empty());
    }

    SECTION("s = 5: never back above 0.9 after the initial decay") {
        std::size_t drop = 0;
        while (drop < series5.values.size() && series5.values[drop] >= 0.5) ++drop;
        REQUIRE(drop < series5.values.size());
        CHECK(series5.times[drop] < tk5);  // dispersed well within one period
        double max_after = 0.0;
        for (std::size_t i = drop; i < series5.values.size(); ++i)
            max_after = std::max(max_after, series5.values[i]);
        CHECK(max_after < 0.9);
        CHECK(max_after == Approx(0.497302).margin(5e-3));  // grid reference value
    }

    SECTION("recurrence summaries ordered by s") {
        const auto r05 = tscs::recurrence_summary(0.5, 3, 2000);
        const auto r5 = tscs::recurrence_summary(5.0, 3, 2000);
        const auto r20 = tscs::recurrence_summary(20.0, 3, 2000);

        // near-harmonic two-level beating brings the tiny packet almost back
        CHECK(r05.max_height == Approx(0.866926797).margin(1e-6));
        CHECK(r05.max_height > 0.8);
        CHECK(r5.max_height == Approx(0.170970327).margin(1e-6));
        CHECK(r5.max_height > 0.0);
        CHECK(r5.max_height < 1.0);
        CHECK(r20.max_height == Approx(0.053356727).margin(1e-6));
        CHECK(r20.max_height < r5.max_height);
        CHECK(r5.max_height < r05.max_height);
        CHECK(r05.time_in_periods > 0.1);
    }

    SECTION("argument checks") {
        CHECK_THROWS_AS(tscs::recurrence_summary(0.0, 3, 100), std::domain_error);
        CHECK_THROWS_AS(tscs::recurrence_summary(5.0, 0, 100), std::domain_error);
    }
}

TEST_CASE("threshold robustness of C(t)", "[autocorr]") {
    for (double s : {5.0, 20.0}) {
        const auto coarse = tscs::weight_table(s, 1e-50);
        const auto base = tscs::weight_table(s, 1e-100);
        const auto fine = tscs::weight_table(s, 1e-200);
        const double t_max =
            3.0 * tscs::kepler_period(std::llround(s * s));
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = t_max * static_cast<double>(i) / 1000.0;
            const double c = tscs::evaluate(base, t);
            worst = std::max(worst, std::fabs(tscs::evaluate(coarse, t) - c));
            worst = std::max(worst, std::fabs(tscs::evaluate(fine, t) - c));
        }
        INFO("s = " << s);
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("grid refinement moves peaks by less than a coarse step", "[autocorr]") {
    const auto table = tscs::weight_table(5.0);
    const double t_max = 3.0 * tscs::kepler_period(25);
    const auto coarse = tscs::scan(table, t_max, 3000);
    const auto fine = tscs::scan(table, t_max, 6000);
    const double coarse_step = coarse.times[1] - coarse.times[0];

    const auto pc = tscs::find_peaks(coarse, 0.05, 0.5 * coarse.kepler_period);
    const auto pf = tscs::find_peaks(fine, 0.05, 0.5 * fine.kepler_period);
    REQUIRE(!pc.peaks.empty());
    for (const auto& peak : pc.peaks) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& other : pf.peaks)
            nearest = std::min(nearest, std::fabs(other.time - peak.time));
        CHECK(nearest < coarse_step);
    }
}

TEST_CASE("series CSV export", "[autocorr]") {
    const auto series = tscs::scan(tscs::weight_table(1.0), 10.0, 3);
    std::ostringstream out;
    tscs::write_csv(out, series);
    const std::string text = out.str();
    CHECK(text.rfind("t_atomic,t_over_kepler,C\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}
