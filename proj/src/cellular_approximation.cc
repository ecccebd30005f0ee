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

#include <algorithm>
#include <cmath>

#include "gtr/errors.h"

namespace gtr {

Target1D uniform_target() {
    return {"uniform", [](double t) { return std::clamp(t, 0.0, 1.0); }};
}

Target1D ramp_target() {
    return {"ramp", [](double t) {
                t = std::clamp(t, 0.0, 1.0);
                return t * t;
            }};
}

Target1D truncated_uniform_target(double lo, double hi) {
    if (!(0 <= lo && lo < hi && hi <= 1)) {
        throw DomainError("truncated target needs 0 <= lo < hi <= 1");
    }
    return {"truncated", [lo, hi](double t) { return std::clamp((t - lo) / (hi - lo), 0.0, 1.0); }};
}

CellularApproximation cellular_approximation(const Target1D &target, std::size_t m, std::size_t ell) {
    if (m == 0 || ell == 0) {
        throw DomainError("m and ell must be positive");
    }
    if (!target.cdf) {
        throw DomainError("target has no distribution function");
    }
    std::vector<double> mass(m);
    double prev = target.cdf(0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double next = target.cdf(static_cast<double>(i + 1) / static_cast<double>(m));
        mass[i] = next - prev;
        if (!std::isfinite(mass[i]) || mass[i] < 0) {
            throw DomainError("block " + std::to_string(i) + " of target '" + target.name +
                              "' has no valid integral");
        }
        prev = next;
    }
    const double top = *std::max_element(mass.begin(), mass.end());
    if (!(top > 0)) {
        throw DomainError("target '" + target.name + "' has no mass");
    }

    std::vector<std::size_t> count(m);
    std::vector<bool> cells(m * ell, false);
    for (std::size_t i = 0; i < m; ++i) {
        const double scaled = mass[i] / top * static_cast<double>(ell);
        count[i] = std::min<std::size_t>(ell, static_cast<std::size_t>(std::llround(scaled)));
        for (std::size_t j = 0; j < ell; ++j) {
            cells[i * ell + j] = (j + 1) * count[i] / ell > j * count[i] / ell;
        }
    }
    return {m, ell, std::move(mass), std::move(count), Cellular1D(CellularMask(std::move(cells)))};
}

ApproximationError approximation_error(const CellularApproximation &approx, const Target1D &target, double x0) {
    if (!(x0 >= 0 && x0 <= 1)) {
        throw DomainError("x0 must lie in [0, 1]");
    }
    const auto m = static_cast<double>(approx.m);
    // Blocks strictly below the one holding x0 (block of x0 is ceil(m x0)).
    const auto below = static_cast<std::size_t>(std::max(0.0, std::ceil(m * x0) - 1));
    const double edge = static_cast<double>(below) / m;

    std::size_t n_b = 0;
    for (auto c : approx.block_breakable) {
        n_b += c;
    }
    ApproximationError e;
    e.p_cell = approx.band.mass_below(x0);
    e.p_exact = target.cdf(x0);
    e.abs_error = std::abs(e.p_cell - e.p_exact);
    for (std::size_t i = 0; i < below; ++i) {
        e.block_term += static_cast<double>(approx.block_breakable[i]) / static_cast<double>(n_b) - approx.block_mass[i];
    }
    e.rest_cell = e.p_cell - approx.band.mass_below(edge);
    e.rest_exact = e.p_exact - target.cdf(edge);
    return e;
}

double max_approximation_error(const CellularApproximation &approx, const Target1D &target, std::size_t n_points) {
    double worst = 0;
    for (std::size_t k = 0; k <= n_points; ++k) {
        const double x0 = static_cast<double>(k) / static_cast<double>(n_points);
        worst = std::max(worst, approximation_error(approx, target, x0).abs_error);
    }
    return worst;
}

}  // namespace gtr
