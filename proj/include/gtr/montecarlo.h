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
#include <vector>

#include "gtr/density.h"
#include "gtr/simplex.h"

namespace gtr {

/// Samples are drawn in blocks of this size; block b always uses
/// RngStream(seed, b), so results do not depend on the thread count.
inline constexpr std::uint64_t kSamplesPerBlock = std::uint64_t{1} << 16;

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct WilsonInterval {
    double lo = 0;
    double hi = 1;
};

/// Wilson score interval for `successes` out of `trials` (trials >= 1).
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kWilsonZ95);

/// Per-outcome Monte Carlo estimate of transition probabilities.
///
/// Breaking points on a region boundary are resolved to the lowest tied
/// outcome and counted there, so the counts sum to n_samples;
/// boundary_hits records how many of them were ties.
struct TransitionEstimate {
    std::vector<std::uint64_t> counts;
    std::uint64_t boundary_hits = 0;
    std::uint64_t n_samples = 0;
    std::vector<double> probabilities;
    std::vector<WilsonInterval> intervals;    // 95% Wilson
    std::vector<double> ci_half_widths;       // (hi - lo) / 2
    std::vector<double> standard_errors;      // sqrt(p (1 - p) / n)

    static TransitionEstimate from_counts(std::vector<std::uint64_t> counts, std::uint64_t boundary_hits);
    std::size_t n_outcomes() const { return counts.size(); }
};

struct MonteCarloOptions {
    unsigned threads = 1;
};

/// Thread count from GTR_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
unsigned default_thread_count();

/// Draws lambda ~ rho n_samples times and classifies each against x.
/// Bit-identical for equal (x, rho, n_samples, seed) at any thread count.
TransitionEstimate estimate(const BarycentricState &x, const Density &rho, std::uint64_t n_samples,
                            std::uint64_t seed, const MonteCarloOptions &options = {});

/// Two-level estimate of the universal measurement on an n_c-cell elastic
/// (N = 2): each draw picks a mask uniformly among the 2^n_c - 1 non-empty
/// ones (the empty mask is redrawn), then samples_per_mask breaking points
/// from that cellular density. Requires 1 <= n_c <= 30.
TransitionEstimate estimate_universal(const BarycentricState &x, std::size_t n_c, std::uint64_t n_masks,
                                      std::uint64_t samples_per_mask, std::uint64_t seed,
                                      const MonteCarloOptions &options = {});

/// P(x' -> i) - P(x -> i) estimated with common breaking points for both
/// states, which removes most of the sampling noise from the difference.
struct PairedDifference {
    std::uint64_t n_samples = 0;
    std::vector<double> difference;
    std::vector<double> standard_errors;
};

PairedDifference paired_difference(const BarycentricState &x, const BarycentricState &x_prime, const Density &rho,
                                   std::uint64_t n_samples, std::uint64_t seed, const MonteCarloOptions &options = {});

}  // namespace gtr
