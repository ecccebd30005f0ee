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

#include "gtr/density.h"
#include "gtr/errors.h"
#include "gtr/montecarlo.h"
#include "gtr/rng.h"

namespace gtr {

namespace {

constexpr double kAnalyticTolerance = 1e-12;

std::vector<double> to_vector(const BarycentricState &s) { return {s.coords().begin(), s.coords().end()}; }

void check_epsilons(const std::vector<double> &grid) {
    if (grid.empty()) {
        throw DomainError("epsilon grid is empty");
    }
    for (double e : grid) {
        if (!(e > 0 && e <= 1)) {
            throw DomainError("epsilon values must lie in (0, 1]");
        }
    }
}

}  // namespace

ControlRegion ControlSpec::at(std::size_t n_outcomes, double epsilon) const {
    switch (family) {
        case ControlFamily::ScaledSimplex:
            return ControlRegion(n_outcomes, KeepScaledSimplex{epsilon});
        case ControlFamily::CoordinateCut:
            return ControlRegion(n_outcomes, KeepCoordinateCut{coord, epsilon});
        case ControlFamily::Balls:
            return ControlRegion(n_outcomes, KeepBalls{centers, epsilon});
    }
    throw DomainError("unknown control family");
}

std::string ControlSpec::describe() const {
    switch (family) {
        case ControlFamily::ScaledSimplex:
            return "simplex";
        case ControlFamily::CoordinateCut:
            return "cut" + std::to_string(coord);
        case ControlFamily::Balls: {
            std::string s = "balls(";
            for (std::size_t a = 0; a < centers.size(); ++a) {
                s += (a ? ";" : "") + centers[a].to_string();
            }
            return s + ")";
        }
    }
    return "?";
}

double total_variation(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw DomainError("distributions differ in length");
    }
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += std::abs(p[i] - q[i]);
    }
    return s / 2;
}

double geometric_epsilon_tilde(const BarycentricState &x, const BarycentricState &x_prime, const ControlSpec &control) {
    if (x == x_prime) {
        return 0;
    }
    constexpr double kNever = std::numeric_limits<double>::infinity();
    if (x.n_outcomes() >= 3) {
        return control.family == ControlFamily::Balls ? kNever : 1.0;
    }
    // N = 2: the regions differ exactly for lambda[0] between the two states.
    const double lo = std::min(x[0], x_prime[0]);
    const double hi = std::max(x[0], x_prime[0]);
    switch (control.family) {
        case ControlFamily::ScaledSimplex:
            return std::max(1 - 2 * lo, 2 * hi - 1);
        case ControlFamily::CoordinateCut:
            return control.coord == 0 ? 1 - lo : hi;
        case ControlFamily::Balls: {
            // Each ball is the lambda[0]-interval c +- epsilon / (2k).
            const double k = static_cast<double>(control.centers.size());
            double best = kNever;
            for (const auto &c : control.centers) {
                best = std::min(best, 2 * k * std::max(c[0] - lo, hi - c[0]));
            }
            if (best > 1) {
                return kNever;
            }
            try {
                control.at(2, 1.0);
            } catch (const DomainError &) {
                return kNever;
            }
            return best;
        }
    }
    return kNever;
}

RobustnessReport robustness_sweep(const BarycentricState &x, const std::vector<double> &delta_x,
                                  const ControlSpec &control, const std::vector<double> &epsilon_grid,
                                  const RobustnessOptions &options) {
    const std::size_t n = x.n_outcomes();
    if (delta_x.size() != n) {
        throw DomainError("perturbation has " + std::to_string(delta_x.size()) + " components, state has " +
                          std::to_string(n));
    }
    double sum = 0;
    for (double d : delta_x) {
        sum += d;
    }
    if (std::abs(sum) > kSumTolerance) {
        throw DomainError("perturbation components must sum to zero");
    }
    if (options.outcome >= n) {
        throw DomainError("outcome index out of range");
    }
    check_epsilons(epsilon_grid);
    std::vector<double> moved(n);
    for (std::size_t j = 0; j < n; ++j) {
        moved[j] = x[j] + delta_x[j];
    }
    const BarycentricState x_prime(moved);  // throws when pushed off the simplex

    RobustnessReport report;
    report.x = to_vector(x);
    report.x_prime = to_vector(x_prime);
    report.outcome = options.outcome;
    report.geometry = control.describe();
    report.geometric_epsilon_tilde = geometric_epsilon_tilde(x, x_prime, control);
    report.rows.resize(epsilon_grid.size());

    const std::size_t i = options.outcome;
    const double shift = std::abs(delta_x[i]);
    for (std::size_t r = 0; r < epsilon_grid.size(); ++r) {
        auto &row = report.rows[r];
        row.epsilon = epsilon_grid[r];
        row.predicted = shift / row.epsilon;
        const Density rho = truncate(Density::uniform(n), control.at(n, row.epsilon));
        bool done = false;
        if (!options.force_monte_carlo) {
            try {
                row.distribution = rho.region_probabilities(x);
                row.measured = std::abs(rho.region_probabilities(x_prime)[i] - row.distribution[i]);
                row.analytic = true;
                done = true;
            } catch (const NotAnalyticError &) {
            }
        }
        if (!done) {
            const std::uint64_t seed = derive_seed(options.seed, r);
            const MonteCarloOptions mc{options.threads};
            const auto diff = paired_difference(x, x_prime, rho, options.n_samples, seed, mc);
            row.measured = std::abs(diff.difference[i]);
            row.std_error = diff.standard_errors[i];
            row.distribution = estimate(x, rho, options.n_samples, derive_seed(seed, 1), mc).probabilities;
        }
        row.ratio = row.predicted > 0 ? row.measured / row.predicted : (row.measured == 0 ? 1.0 : 0.0);
        const double gap = std::abs(row.measured - row.predicted);
        row.agrees = row.analytic ? gap <= kAnalyticTolerance * std::max(1.0, row.predicted)
                                  : gap <= options.agreement_sigmas * row.std_error;
    }

    std::vector<std::size_t> order(report.rows.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        order[r] = r;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return report.rows[a].epsilon > report.rows[b].epsilon; });
    for (std::size_t r : order) {
        if (!report.rows[r].agrees) {
            break;
        }
        report.empirical_epsilon_tilde = report.rows[r].epsilon;
    }
    return report;
}

DiracLimitReport dirac_limit_demo(const BarycentricState &x, const std::vector<BarycentricState> &points,
                                  const std::vector<double> &epsilon_sequence, const RobustnessOptions &options) {
    check_epsilons(epsilon_sequence);
    if (points.empty()) {
        throw DomainError("at least one Dirac point required");
    }
    const std::size_t n = x.n_outcomes();
    for (std::size_t a = 0; a < points.size(); ++a) {
        if (points[a].n_outcomes() != n) {
            throw DomainError("Dirac point dimension mismatch");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (points[a] == points[b]) {
                throw DomainError("Dirac points must be distinct");
            }
        }
    }
    const ControlSpec spec{ControlFamily::Balls, 0, points};
    // Validates the balls at the largest requested epsilon; smaller balls
    // around the same centres stay valid.
    spec.at(n, *std::max_element(epsilon_sequence.begin(), epsilon_sequence.end()));

    DiracLimitReport report;
    report.x = to_vector(x);
    for (const auto &p : points) {
        report.points.push_back(to_vector(p));
    }
    report.limit.assign(n, 0.0);
    for (const auto &p : points) {
        report.limit[region_of(p, x).resolved()] += 1.0 / static_cast<double>(points.size());
    }
    for (std::size_t r = 0; r < epsilon_sequence.size(); ++r) {
        DiracLimitRow row;
        row.epsilon = epsilon_sequence[r];
        const Density rho = truncate(Density::uniform(n), spec.at(n, row.epsilon));
        try {
            row.distribution = rho.region_probabilities(x);
            row.analytic = true;
        } catch (const NotAnalyticError &) {
            const auto est = estimate(x, rho, options.n_samples, derive_seed(options.seed, r),
                                      MonteCarloOptions{options.threads});
            row.distribution = est.probabilities;
            row.std_error = *std::max_element(est.standard_errors.begin(), est.standard_errors.end());
        }
        row.tv_distance = total_variation(row.distribution, report.limit);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace gtr
