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

#include "gtr/robustness.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "gtr/errors.h"

namespace gtr {
namespace {

// For N = 2 the two states' regions differ on lambda[0] in [a, b]; under the
// uniform density on the kept interval K the change is |[a,b] n K| / |K|.
double interval_oracle(double a, double b, double k_lo, double k_hi) {
    const double overlap = std::max(0.0, std::min(b, k_hi) - std::max(a, k_lo));
    return overlap / (k_hi - k_lo);
}

const std::vector<double> kGrid{1, 0.5, 0.25, 0.1, 0.05, 0.02, 0.01};

TEST(RobustnessSweep, TwoOutcomeLawIsExactAboveThreshold) {
    const BarycentricState x({0.5, 0.5});
    const auto r = robustness_sweep(x, {0.01, -0.01}, ControlSpec{}, kGrid);
    EXPECT_DOUBLE_EQ(r.geometric_epsilon_tilde, 0.51 * 2 - 1);
    ASSERT_TRUE(r.empirical_epsilon_tilde.has_value());
    EXPECT_DOUBLE_EQ(*r.empirical_epsilon_tilde, 0.02);
    for (const auto &row : r.rows) {
        EXPECT_TRUE(row.analytic);
        const double oracle = interval_oracle(0.5, 0.51, (1 - row.epsilon) / 2, (1 + row.epsilon) / 2);
        EXPECT_NEAR(row.measured, oracle, 1e-12) << row.epsilon;
        if (row.epsilon >= r.geometric_epsilon_tilde - 1e-12) {
            EXPECT_TRUE(row.agrees);
            EXPECT_NEAR(row.measured * row.epsilon, 0.01, 1e-12);
        } else {
            EXPECT_FALSE(row.agrees);
        }
    }
}

TEST(RobustnessSweep, FullDensityChangeEqualsPerturbation) {
    const auto r = robustness_sweep(BarycentricState::centroid(3), {0.01, -0.01, 0}, ControlSpec{}, {1.0});
    EXPECT_TRUE(r.rows[0].analytic);
    EXPECT_NEAR(r.rows[0].measured, 0.01, 1e-15);
}

TEST(RobustnessSweep, NoPerturbationNoChange) {
    const auto r = robustness_sweep(BarycentricState({0.4, 0.6}), {0, 0}, ControlSpec{}, kGrid);
    EXPECT_EQ(r.geometric_epsilon_tilde, 0);
    for (const auto &row : r.rows) {
        EXPECT_EQ(row.measured, 0);
        EXPECT_EQ(row.ratio, 1);
        EXPECT_TRUE(row.agrees);
    }
}

TEST(RobustnessSweep, CutGeometryThreshold) {
    const ControlSpec cut{ControlFamily::CoordinateCut, 0, {}};
    const auto r = robustness_sweep(BarycentricState({0.5, 0.5}), {0.01, -0.01}, cut, {1, 0.75, 0.5, 0.4, 0.3});
    EXPECT_DOUBLE_EQ(r.geometric_epsilon_tilde, 0.5);
    EXPECT_DOUBLE_EQ(*r.empirical_epsilon_tilde, 0.5);
    for (const auto &row : r.rows) {
        EXPECT_NEAR(row.measured, interval_oracle(0.5, 0.51, 1 - row.epsilon, 1), 1e-12);
    }
}

TEST(RobustnessSweep, BallGeometryThreshold) {
    const ControlSpec ball{ControlFamily::Balls, 0, {BarycentricState({0.5, 0.5})}};
    const auto r = robustness_sweep(BarycentricState({0.5, 0.5}), {0.01, -0.01}, ball, kGrid);
    EXPECT_NEAR(r.geometric_epsilon_tilde, 0.02, 1e-15);
    for (const auto &row : r.rows) {
        EXPECT_NEAR(row.measured, interval_oracle(0.5, 0.51, 0.5 - row.epsilon / 2, 0.5 + row.epsilon / 2), 1e-12);
    }
}

TEST(RobustnessSweep, MonteCarloPathAgreesWithinThreeSigma) {
    RobustnessOptions opts;
    opts.force_monte_carlo = true;
    opts.n_samples = 400000;
    opts.seed = 77;
    const auto r = robustness_sweep(BarycentricState({0.5, 0.5}), {0.01, -0.01}, ControlSpec{},
                                    {1, 0.5, 0.25, 0.1, 0.05}, opts);
    for (const auto &row : r.rows) {
        EXPECT_FALSE(row.analytic);
        EXPECT_GT(row.std_error, 0);
        EXPECT_LE(std::abs(row.measured - row.predicted), 3 * row.std_error) << row.epsilon;
    }
}

TEST(RobustnessSweep, ThreeOutcomesFallShortOfTheLaw) {
    // The zone where the regions differ reaches the vertices, which every
    // proper control region removes; only epsilon = 1 satisfies the law.
    RobustnessOptions opts;
    opts.n_samples = 400000;
    opts.seed = 5;
    const auto r = robustness_sweep(BarycentricState::centroid(3), {0.01, -0.01, 0}, ControlSpec{}, {1, 0.5}, opts);
    EXPECT_EQ(r.geometric_epsilon_tilde, 1);
    EXPECT_TRUE(r.rows[0].agrees);
    EXPECT_FALSE(r.rows[1].analytic);
    const double scaled = r.rows[1].measured * r.rows[1].epsilon;
    EXPECT_LT(scaled, 0.0095);
    EXPECT_GT(scaled, 0.0085);
}

TEST(RobustnessSweep, Validation) {
    const BarycentricState x({0.5, 0.5});
    EXPECT_THROW(robustness_sweep(x, {0.01, 0.01}, ControlSpec{}, kGrid), DomainError);
    EXPECT_THROW(robustness_sweep(x, {0.6, -0.6}, ControlSpec{}, kGrid), DomainError);
    EXPECT_THROW(robustness_sweep(x, {0.01, -0.01, 0}, ControlSpec{}, kGrid), DomainError);
    EXPECT_THROW(robustness_sweep(x, {0.01, -0.01}, ControlSpec{}, {0.0}), DomainError);
    EXPECT_THROW(robustness_sweep(x, {0.01, -0.01}, ControlSpec{}, {}), DomainError);
    RobustnessOptions opts;
    opts.outcome = 2;
    EXPECT_THROW(robustness_sweep(x, {0.01, -0.01}, ControlSpec{}, kGrid, opts), DomainError);
}

const std::vector<double> kShrinking{0.1, 0.03, 0.01, 0.003, 0.001};

RobustnessOptions dirac_options(std::uint64_t seed) {
    RobustnessOptions o;
    o.n_samples = 200000;
    o.seed = seed;
    return o;
}

TEST(DiracLimit, SinglePointIsDeterministic) {
    const auto x = BarycentricState::centroid(3);
    const auto r = dirac_limit_demo(x, {BarycentricState({0.4, 0.2, 0.4})}, kShrinking, dirac_options(1));
    EXPECT_EQ(r.limit, (std::vector<double>{0, 1, 0}));
    EXPECT_EQ(r.rows.back().tv_distance, 0);
}

TEST(DiracLimit, TwoPointsSplitEvenly) {
    const auto x = BarycentricState::centroid(3);
    const auto r = dirac_limit_demo(x, {BarycentricState({0.1, 0.45, 0.45}), BarycentricState({0.45, 0.45, 0.1})},
                                    kShrinking, dirac_options(2));
    EXPECT_EQ(r.limit, (std::vector<double>{0.5, 0, 0.5}));
    EXPECT_LT(r.rows.back().tv_distance, 0.01);
    for (std::size_t k = 1; k < r.rows.size(); ++k) {
        EXPECT_LE(r.rows[k].tv_distance,
                  r.rows[k - 1].tv_distance + 3 * (r.rows[k].std_error + r.rows[k - 1].std_error));
    }
}

TEST(DiracLimit, PointsInOneRegion) {
    const auto x = BarycentricState::centroid(3);
    const auto r = dirac_limit_demo(
        x, {BarycentricState({0.1, 0.5, 0.4}), BarycentricState({0.12, 0.3, 0.58}), BarycentricState({0.15, 0.45, 0.4})},
        {0.01, 0.001}, dirac_options(3));
    EXPECT_EQ(r.limit, (std::vector<double>{1, 0, 0}));
    EXPECT_EQ(r.rows.back().distribution, (std::vector<double>{1, 0, 0}));
}

TEST(DiracLimit, TwoOutcomesAreExact) {
    const BarycentricState x({0.5, 0.5});
    const auto r = dirac_limit_demo(x, {BarycentricState({0.2, 0.8}), BarycentricState({0.9, 0.1})},
                                    {0.1, 0.01, 0.001}, dirac_options(4));
    for (const auto &row : r.rows) {
        EXPECT_TRUE(row.analytic);
        EXPECT_NEAR(row.tv_distance, 0, 1e-12);
    }
    const auto straddle = dirac_limit_demo(x, {BarycentricState({0.49, 0.51})}, {0.1, 0.04, 0.02, 0.01},
                                           dirac_options(4));
    // Ball [0.49 - eps/2, 0.49 + eps/2] loses its part above 0.5 as it shrinks.
    for (std::size_t k = 0; k < straddle.rows.size(); ++k) {
        const double eps = straddle.rows[k].epsilon;
        const double above = std::max(0.0, 0.49 + eps / 2 - 0.5) / eps;
        EXPECT_NEAR(straddle.rows[k].tv_distance, above, 1e-12);
    }
}

TEST(DiracLimit, Validation) {
    const auto x = BarycentricState::centroid(3);
    const BarycentricState p({0.2, 0.4, 0.4});
    EXPECT_THROW(dirac_limit_demo(x, {p, p}, kShrinking), DomainError);
    EXPECT_THROW(dirac_limit_demo(x, {}, kShrinking), DomainError);
    EXPECT_THROW(dirac_limit_demo(x, {BarycentricState({0.1, 0.45, 0.45}), BarycentricState({0.45, 0.45, 0.1})}, {0.5}),
                 DomainError);
}

TEST(TotalVariation, Basics) {
    EXPECT_DOUBLE_EQ(total_variation({0.5, 0.5}, {1, 0}), 0.5);
    EXPECT_THROW(total_variation({1}, {0.5, 0.5}), DomainError);
}

}  // namespace
}  // namespace gtr
