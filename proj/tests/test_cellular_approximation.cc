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

#include "gtr/cellular_approximation.h"

#include <cmath>

#include <gtest/gtest.h>

#include "gtr/errors.h"

namespace gtr {
namespace {

// Closed-form oracle for the ramp: density 2t on lambda[0], so
// P(-> outcome 0) = integral_0^x 2t dt.
double ramp_exact(double x) { return x * x; }

TEST(CellularApproximation, UniformTargetIsAllBreakable) {
    for (auto [m, ell] : {std::pair<std::size_t, std::size_t>{4, 3}, {8, 8}, {5, 1}}) {
        const auto a = cellular_approximation(uniform_target(), m, ell);
        EXPECT_EQ(a.band.mask().n_breakable(), m * ell);
        for (std::size_t k = 0; k <= m; ++k) {
            const double x0 = static_cast<double>(k) / static_cast<double>(m);
            EXPECT_NEAR(approximation_error(a, uniform_target(), x0).abs_error, 0, 1e-15);
        }
    }
}

TEST(CellularApproximation, RampAtThirtyTwo) {
    const auto a = cellular_approximation(ramp_target(), 32, 32);
    const auto e = approximation_error(a, ramp_target(), 0.5);
    EXPECT_DOUBLE_EQ(e.p_exact, ramp_exact(0.5));
    EXPECT_LE(e.abs_error, 0.05);
}

TEST(CellularApproximation, RampErrorShrinks) {
    const auto coarse = approximation_error(cellular_approximation(ramp_target(), 8, 8), ramp_target(), 0.5);
    const auto fine = approximation_error(cellular_approximation(ramp_target(), 64, 64), ramp_target(), 0.5);
    EXPECT_LT(fine.abs_error, coarse.abs_error);
    EXPECT_LT(fine.abs_error, 0.02);
}

TEST(CellularApproximation, BlockCountsFollowTargetMass) {
    const auto a = cellular_approximation(ramp_target(), 8, 8);
    // Block masses (2i+1)/64 scaled so the heaviest block is full.
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(a.block_breakable[i], static_cast<std::size_t>(std::llround((2.0 * i + 1) * 8 / 15)));
        std::size_t in_block = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            in_block += a.band.mask().breakable(i * 8 + j);
        }
        EXPECT_EQ(in_block, a.block_breakable[i]);
    }
}

TEST(CellularApproximation, SupErrorIsMonotoneAlongDyadicSequence) {
    const std::vector<Target1D> targets = {uniform_target(), ramp_target(), truncated_uniform_target(0.3, 0.75)};
    for (const auto &t : targets) {
        double previous = 1;
        for (std::size_t k = 3; k <= 6; ++k) {
            const std::size_t m = std::size_t{1} << k;
            const double err = max_approximation_error(cellular_approximation(t, m, m), t, 997);
            EXPECT_LE(err, previous + 1e-15) << t.name << " k=" << k;
            previous = err;
        }
    }
}

TEST(CellularApproximation, ErrorDecomposes) {
    const auto t = truncated_uniform_target(0.3, 0.75);
    for (std::size_t m : {4u, 16u, 64u}) {
        const auto a = cellular_approximation(ramp_target(), m, 16);
        const auto b = cellular_approximation(t, m, 16);
        for (double x0 : {0.0, 0.13, 0.5, 0.61, 0.999, 1.0}) {
            for (const auto &[approx, target] : {std::pair{&a, ramp_target()}, std::pair{&b, t}}) {
                const auto e = approximation_error(*approx, target, x0);
                EXPECT_NEAR(e.p_cell - e.p_exact, e.block_term + e.rest_cell - e.rest_exact, 1e-12);
            }
        }
    }
}

TEST(CellularApproximation, RestTermVanishesAsBlocksShrink) {
    double previous = 1;
    for (std::size_t m : {4u, 16u, 64u, 256u}) {
        const auto e = approximation_error(cellular_approximation(ramp_target(), m, 4), ramp_target(), 0.6180339887);
        EXPECT_LT(std::abs(e.rest_exact), previous);
        previous = std::abs(e.rest_exact);
    }
    EXPECT_LT(previous, 2.0 / 256);
}

TEST(CellularApproximation, RejectsUnusableTargets) {
    EXPECT_THROW(cellular_approximation(ramp_target(), 0, 4), DomainError);
    const Target1D bad{"nan", [](double t) { return t < 0.5 ? t : std::nan(""); }};
    EXPECT_THROW(cellular_approximation(bad, 4, 4), DomainError);
    const Target1D decreasing{"decreasing", [](double t) { return 1 - t; }};
    EXPECT_THROW(cellular_approximation(decreasing, 4, 4), DomainError);
    EXPECT_THROW(truncated_uniform_target(0.6, 0.4), DomainError);
}

}  // namespace
}  // namespace gtr
