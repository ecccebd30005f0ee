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

#include <functional>
#include <string>
#include <vector>

#include "gtr/density.h"

namespace gtr {

/// Target density on S_1, given through its distribution function in the
/// first barycentric weight: cdf(t) = mass of lambda[0] in [0, t], so that
/// the exact transition probability to outcome 0 is cdf(x[0]).
struct Target1D {
    std::string name;
    std::function<double(double)> cdf;
};

Target1D uniform_target();
/// Density proportional to lambda[0] (a linear ramp in the internal
/// coordinate vanishing at the vertex of outcome 1); cdf(t) = t^2.
Target1D ramp_target();
/// Uniform on lambda[0] in [lo, hi].
Target1D truncated_uniform_target(double lo, double hi);

struct CellularApproximation {
    std::size_t m = 0;
    std::size_t ell = 0;
    std::vector<double> block_mass;            // target mass of each block
    std::vector<std::size_t> block_breakable;  // breakable cells per block
    Cellular1D band;
};

/// Splits S_1 into m blocks of ell cells. Block i gets
/// round(ell * mass_i / max_j mass_j) breakable cells spread evenly through
/// the block, so that block ratios track the target block masses.
/// Throws DomainError when a block mass is not finite or negative.
CellularApproximation cellular_approximation(const Target1D &target, std::size_t m, std::size_t ell);

/// p_cell - p_exact = block_term + rest_cell - rest_exact, where the block
/// term sums the mass error over the blocks fully below x[0] and the rest
/// terms are the masses of the partial block containing x[0].
struct ApproximationError {
    double p_cell = 0;
    double p_exact = 0;
    double abs_error = 0;
    double block_term = 0;
    double rest_cell = 0;
    double rest_exact = 0;
};

ApproximationError approximation_error(const CellularApproximation &approx, const Target1D &target, double x0);

/// Largest |p_cell - p_exact| over x0 = k / n_points, k = 0..n_points.
double max_approximation_error(const CellularApproximation &approx, const Target1D &target,
                               std::size_t n_points = 1000);

}  // namespace gtr
