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

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gtr/control_region.h"
#include "gtr/simplex.h"

namespace gtr {

enum class ControlFamily { ScaledSimplex, CoordinateCut, Balls };

/// A one-parameter family of control regions, instantiated per epsilon.
struct ControlSpec {
    ControlFamily family = ControlFamily::ScaledSimplex;
    std::size_t coord = 0;                     // CoordinateCut
    std::vector<BarycentricState> centers;     // Balls

    ControlRegion at(std::size_t n_outcomes, double epsilon) const;
    std::string describe() const;
};

struct RobustnessOptions {
    std::size_t outcome = 0;
    std::uint64_t n_samples = 1'000'000;  // per epsilon, Monte Carlo path only
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool force_monte_carlo = false;
    /// Monte Carlo rows agree with the law when within this many standard errors.
    double agreement_sigmas = 3;
};

struct RobustnessRow {
    double epsilon = 1;
    double measured = 0;   // |P(x' -> i) - P(x -> i)|
    double predicted = 0;  // |delta_x_i| / epsilon
    double ratio = 1;      // measured / predicted (1 when both vanish)
    double std_error = 0;  // zero on the analytic path
    bool analytic = false;
    bool agrees = false;
    std::vector<double> distribution;  // P(x -> .) under the truncated density
};

struct RobustnessReport {
    std::vector<double> x;
    std::vector<double> x_prime;
    std::size_t outcome = 0;
    std::string geometry;
    std::vector<RobustnessRow> rows;  // in epsilon_grid order
    /// Smallest epsilon from which the law holds exactly for this geometry;
    /// +inf when no epsilon in (0, 1] qualifies.
    double geometric_epsilon_tilde = 1;
    /// Smallest grid epsilon such that every row at or above it agrees.
    std::optional<double> empirical_epsilon_tilde;
};

/// Measures |Delta P_i| between x and x + delta_x under the uniform density
/// truncated by `control` at each epsilon in the grid, and compares it with
/// |delta_x_i| / epsilon. N = 2 rows are computed exactly; other rows use
/// paired Monte Carlo. Throws DomainError when delta_x does not sum to zero
/// or moves x off the simplex.
RobustnessReport robustness_sweep(const BarycentricState &x, const std::vector<double> &delta_x,
                                  const ControlSpec &control, const std::vector<double> &epsilon_grid,
                                  const RobustnessOptions &options = {});

/// Smallest epsilon at which the truncated breakable zone contains the whole
/// zone where the regions of x and x_prime differ, so that the law holds
/// exactly from there up to 1. For N >= 3 that zone reaches the vertices,
/// so only the full uniform density qualifies and the result is 1 (or +inf
/// when the family cannot reach epsilon = 1). Zero when x == x_prime.
double geometric_epsilon_tilde(const BarycentricState &x, const BarycentricState &x_prime, const ControlSpec &control);

struct DiracLimitRow {
    double epsilon = 1;
    std::vector<double> distribution;
    double tv_distance = 0;
    double std_error = 0;  // largest per-outcome standard error; zero when analytic
    bool analytic = false;
};

struct DiracLimitReport {
    std::vector<double> x;
    std::vector<std::vector<double>> points;
    std::vector<double> limit;  // fraction of points classified into each outcome
    std::vector<DiracLimitRow> rows;
};

/// Shrinks the breakable zone onto k balls around the given points and
/// reports the outcome distribution for x at each epsilon together with its
/// total-variation distance from the distribution of region_of(point, x).
/// Throws DomainError when points repeat or the balls are invalid at the
/// largest epsilon.
DiracLimitReport dirac_limit_demo(const BarycentricState &x, const std::vector<BarycentricState> &points,
                                  const std::vector<double> &epsilon_sequence, const RobustnessOptions &options = {});

double total_variation(const std::vector<double> &p, const std::vector<double> &q);

}  // namespace gtr
