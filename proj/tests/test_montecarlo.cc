// Copyright 2026 The GTR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtr/montecarlo.h"

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "gtr/errors.h"
#include "support.h"

namespace gtr {
namespace {

bool same(const TransitionEstimate &a, const TransitionEstimate &b) {
    return a.counts == b.counts && a.boundary_hits == b.boundary_hits && a.n_samples == b.n_samples &&
           a.probabilities == b.probabilities && a.ci_half_widths == b.ci_half_widths;
}

TEST(WilsonInterval, ReferenceValues) {
    // Values from statsmodels' proportion_confint(method="wilson").
    auto a = wilson_interval(0, 10);
    EXPECT_NEAR(a.lo, 0.0, 1e-12);
    EXPECT_NEAR(a.hi, 0.27753279986288926, 1e-12);
    auto b = wilson_interval(5, 10);
    EXPECT_NEAR(b.lo, 0.23659309051256394, 1e-12);
    EXPECT_NEAR(b.hi, 0.7634069094874361, 1e-12);
    auto c = wilson_interval(81, 263);
    EXPECT_NEAR(c.lo, 0.2552885198782742, 1e-12);
    EXPECT_NEAR(c.hi, 0.36620957698280004, 1e-12);
    EXPECT_THROW(wilson_interval(3, 0), DomainError);
    EXPECT_THROW(wilson_interval(4, 3), DomainError);
}

TEST(Estimate, UniformTwoOutcomes) {
    const BarycentricState x({0.7, 0.3});
    const auto e = estimate(x, Density::uniform(2), 1'000'000, 42);
    EXPECT_NEAR(e.probabilities[0], 0.7, 0.002);
    EXPECT_EQ(e.counts[0] + e.counts[1], e.n_samples);
    EXPECT_LE(e.intervals[0].lo, e.probabilities[0]);
    EXPECT_GE(e.intervals[0].hi, e.probabilities[0]);
}

TEST(Estimate, UniformFiveOutcomes) {
    const BarycentricState x({0.1, 0.1, 0.2, 0.3, 0.3});
    const auto e = estimate(x, Density::uniform(5), 1'000'000, 43, {default_thread_count()});
    const auto exact = Density::uniform(5).region_probabilities(x);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_NEAR(e.probabilities[i], x[i], 4 * std::sqrt(x[i] * (1 - x[i]) / 1e6));
        EXPECT_EQ(exact[i], x[i]);
    }
}

TEST(Estimate, DiracIsDeterministic) {
    const auto x = BarycentricState::centroid(3);
    const auto rho = Density::dirac({BarycentricState({0.4, 0.2, 0.4})});
    const std::uint64_t n = 100000;
    const auto e = estimate(x, rho, n, 1);
    EXPECT_EQ(e.counts, (std::vector<std::uint64_t>{0, n, 0}));
    EXPECT_EQ(e.boundary_hits, 0u);
    // A Wilson interval never has zero width; it shrinks like z^2 / n.
    for (double w : e.ci_half_widths) {
        EXPECT_LT(w, 2.0 / static_cast<double>(n));
    }
}

TEST(Estimate, BoundaryPointsAreCountedOnce) {
    const auto x = BarycentricState::centroid(3);
    const auto rho = Density::dirac({BarycentricState({0.2, 0.2, 0.6})});
    const auto e = estimate(x, rho, 1000, 1);
    EXPECT_EQ(e.boundary_hits, 1000u);
    EXPECT_EQ(e.counts, (std::vector<std::uint64_t>{1000, 0, 0}));
}

TEST(Estimate, Reproducible) {
    const BarycentricState x({0.25, 0.25, 0.5});
    const auto a = estimate(x, Density::uniform(3), 200000, 99);
    const auto b = estimate(x, Density::uniform(3), 200000, 99);
    EXPECT_TRUE(same(a, b));
    const auto c = estimate(x, Density::uniform(3), 200000, 100);
    EXPECT_NE(a.counts, c.counts);
}

TEST(Estimate, ThreadCountDoesNotChangeResult) {
    const BarycentricState x({0.15, 0.35, 0.5});
    const auto rho = Density::cellular_grid(3, 5, std::vector<bool>(25, true));
    const auto one = estimate(x, rho, 300001, 5, {1});
    for (unsigned threads : {2u, 3u, 8u}) {
        EXPECT_TRUE(same(one, estimate(x, rho, 300001, 5, {threads}))) << threads;
    }
}

TEST(Estimate, WilsonCoverageIsCalibrated) {
    testing::Gen gen(12);
    int covered = 0, total = 0;
    for (int run = 0; run < 200; ++run) {
        const auto x = gen.interior_state(3, 0.05);
        const auto e = estimate(x, Density::uniform(3), 10000, 5000 + run);
        for (std::size_t i = 0; i < 3; ++i) {
            covered += e.intervals[i].lo <= x[i] && x[i] <= e.intervals[i].hi;
            ++total;
        }
    }
    EXPECT_GE(static_cast<double>(covered) / total, 0.90);
}

TEST(Estimate, BoundaryHitsAreRareForContinuousDensities) {
    const BarycentricState x({0.3, 0.3, 0.4});
    const auto e = estimate(x, Density::uniform(3), 1'000'000, 8);
    EXPECT_LT(static_cast<double>(e.boundary_hits) / 1e6, 1e-6);
}

TEST(Estimate, Validation) {
    EXPECT_THROW(estimate(BarycentricState::centroid(2), Density::uniform(3), 10, 1), DomainError);
    EXPECT_THROW(estimate(BarycentricState::centroid(2), Density::uniform(2), 0, 1), DomainError);
}

TEST(EstimateUniversal, MatchesExactAverage) {
    const std::size_t n_c = 16;
    for (std::size_t i : {3u, 8u, 13u}) {
        const double x0 = static_cast<double>(i) / n_c;
        const auto e = estimate_universal(BarycentricState({x0, 1 - x0}), n_c, 100000, 1, 7 + i);
        // Left end of the elastic is outcome 1.
        const double expected = static_cast<double>(n_c - i) / n_c;
        EXPECT_NEAR(e.probabilities[1], expected, 4 * std::sqrt(expected * (1 - expected) / 1e5));
    }
}

TEST(EstimateUniversal, TwoCellsAtMidpoint) {
    const auto e = estimate_universal(BarycentricState({0.5, 0.5}), 2, 200000, 3, 11);
    EXPECT_NEAR(e.probabilities[0], 0.5, 4 * std::sqrt(0.25 / 6e5));
    EXPECT_EQ(e.n_samples, 600000u);
}

TEST(EstimateUniversal, SingleCellIsTheUniformBand) {
    const auto e = estimate_universal(BarycentricState({0.0, 1.0}), 1, 1000, 1, 2);
    EXPECT_EQ(e.counts[1], 1000u);
    const auto f = estimate_universal(BarycentricState({0.3, 0.7}), 1, 100000, 1, 2);
    EXPECT_NEAR(f.probabilities[0], 0.3, 4 * std::sqrt(0.21 / 1e5));
}

TEST(EstimateUniversal, Validation) {
    EXPECT_THROW(estimate_universal(BarycentricState::centroid(3), 4, 10, 1, 1), DomainError);
    EXPECT_THROW(estimate_universal(BarycentricState::centroid(2), 31, 10, 1, 1), DomainError);
    EXPECT_THROW(estimate_universal(BarycentricState::centroid(2), 0, 10, 1, 1), DomainError);
}

TEST(PairedDifference, UniformShiftEqualsPerturbation) {
    const BarycentricState x({0.5, 0.5});
    const BarycentricState y({0.51, 0.49});
    const auto d = paired_difference(x, y, Density::uniform(2), 1'000'000, 4);
    EXPECT_NEAR(d.difference[0], 0.01, 4 * d.standard_errors[0]);
    EXPECT_NEAR(d.difference[0], -d.difference[1], 1e-15);
    // Common breaking points: only draws in [0.5, 0.51] contribute.
    EXPECT_LT(d.standard_errors[0], 2e-4);
}

TEST(DefaultThreadCount, EnvironmentOverride) {
    ::setenv("GTR_THREADS", "3", 1);
    EXPECT_EQ(default_thread_count(), 3u);
    ::setenv("GTR_THREADS", "zero", 1);
    EXPECT_GE(default_thread_count(), 1u);
    ::unsetenv("GTR_THREADS");
}

}  // namespace
}  // namespace gtr
