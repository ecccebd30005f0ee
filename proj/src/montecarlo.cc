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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "gtr/errors.h"
#include "gtr/rng.h"
#include "parallel.h"

namespace gtr {

namespace {

struct Tally {
    std::vector<std::uint64_t> counts;
    std::uint64_t boundary_hits = 0;

    void add(const RegionLabel &label) {
        ++counts[label.resolved()];
        boundary_hits += label.is_boundary();
    }
};

std::uint64_t n_blocks(std::uint64_t n) { return (n + kSamplesPerBlock - 1) / kSamplesPerBlock; }

std::uint64_t block_size(std::uint64_t block, std::uint64_t n) {
    return std::min(kSamplesPerBlock, n - block * kSamplesPerBlock);
}

/// Runs fill(tally, rng, count) for every block and merges the tallies.
template <class Fill>
TransitionEstimate run_blocks(std::size_t n_outcomes, std::uint64_t n_items, std::uint64_t seed, unsigned threads,
                              Fill fill) {
    const std::uint64_t blocks = n_blocks(n_items);
    std::vector<Tally> tallies(blocks, Tally{std::vector<std::uint64_t>(n_outcomes, 0)});
    detail::for_each_chunk(blocks, threads, [&](std::uint64_t b) {
        RngStream rng(seed, b);
        fill(tallies[b], rng, block_size(b, n_items));
    });
    std::vector<std::uint64_t> counts(n_outcomes, 0);
    std::uint64_t boundary = 0;
    for (const auto &t : tallies) {
        for (std::size_t i = 0; i < n_outcomes; ++i) {
            counts[i] += t.counts[i];
        }
        boundary += t.boundary_hits;
    }
    return TransitionEstimate::from_counts(std::move(counts), boundary);
}

void require_samples(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("need at least one sample");
    }
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0 || successes > trials) {
        throw DomainError("Wilson interval needs 0 <= successes <= trials, trials >= 1");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TransitionEstimate TransitionEstimate::from_counts(std::vector<std::uint64_t> counts, std::uint64_t boundary_hits) {
    TransitionEstimate e;
    for (auto c : counts) {
        e.n_samples += c;
    }
    require_samples(e.n_samples);
    e.counts = std::move(counts);
    e.boundary_hits = boundary_hits;
    const double n = static_cast<double>(e.n_samples);
    for (auto c : e.counts) {
        const double p = static_cast<double>(c) / n;
        const auto ci = wilson_interval(c, e.n_samples);
        e.probabilities.push_back(p);
        e.intervals.push_back(ci);
        e.ci_half_widths.push_back((ci.hi - ci.lo) / 2);
        e.standard_errors.push_back(std::sqrt(p * (1 - p) / n));
    }
    return e;
}

unsigned default_thread_count() {
    if (const char *env = std::getenv("GTR_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

TransitionEstimate estimate(const BarycentricState &x, const Density &rho, std::uint64_t n_samples,
                            std::uint64_t seed, const MonteCarloOptions &options) {
    require_samples(n_samples);
    if (x.n_outcomes() != rho.n_outcomes()) {
        throw DomainError("state and density differ in dimension");
    }
    return run_blocks(x.n_outcomes(), n_samples, seed, options.threads,
                      [&](Tally &t, RngStream &rng, std::uint64_t count) {
                          for (std::uint64_t s = 0; s < count; ++s) {
                              t.add(region_of(rho.sample(rng), x));
                          }
                      });
}

TransitionEstimate estimate_universal(const BarycentricState &x, std::size_t n_c, std::uint64_t n_masks,
                                      std::uint64_t samples_per_mask, std::uint64_t seed,
                                      const MonteCarloOptions &options) {
    if (x.n_outcomes() != 2) {
        throw DomainError("universal estimation works on the 1-D elastic (N = 2)");
    }
    if (n_c < 1 || n_c > 30) {
        throw DomainError("universal estimation supports 1 <= n_c <= 30");
    }
    require_samples(n_masks);
    require_samples(samples_per_mask);
    const std::uint64_t all = (std::uint64_t{1} << n_c) - 1;
    return run_blocks(2, n_masks, seed, options.threads, [&](Tally &t, RngStream &rng, std::uint64_t count) {
        for (std::uint64_t d = 0; d < count; ++d) {
            std::uint64_t mask = 0;
            while (mask == 0) {
                mask = rng.next_u64() & all;
            }
            const auto k = static_cast<std::uint64_t>(std::popcount(mask));
            for (std::uint64_t s = 0; s < samples_per_mask; ++s) {
                std::uint64_t rank = rng.below(k);
                std::uint64_t bits = mask;
                while (rank-- > 0) {
                    bits &= bits - 1;
                }
                const auto cell = static_cast<double>(std::countr_zero(bits));
                const double t0 = (cell + rng.uniform()) / static_cast<double>(n_c);
                t.add(region_of(BarycentricState({t0, 1 - t0}), x));
            }
        }
    });
}

PairedDifference paired_difference(const BarycentricState &x, const BarycentricState &x_prime, const Density &rho,
                                   std::uint64_t n_samples, std::uint64_t seed, const MonteCarloOptions &options) {
    require_samples(n_samples);
    const std::size_t n = rho.n_outcomes();
    if (x.n_outcomes() != n || x_prime.n_outcomes() != n) {
        throw DomainError("states and density differ in dimension");
    }
    // Per block: gains[i] counts draws moving into outcome i, losses[i] out of it.
    struct Flow {
        std::vector<std::uint64_t> gains, losses;
    };
    const std::uint64_t blocks = n_blocks(n_samples);
    std::vector<Flow> flows(blocks, Flow{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)});
    detail::for_each_chunk(blocks, options.threads, [&](std::uint64_t b) {
        RngStream rng(seed, b);
        auto &f = flows[b];
        for (std::uint64_t s = block_size(b, n_samples); s > 0; --s) {
            const auto lambda = rho.sample(rng);
            const auto before = region_of(lambda, x).resolved();
            const auto after = region_of(lambda, x_prime).resolved();
            if (before != after) {
                ++f.losses[before];
                ++f.gains[after];
            }
        }
    });
    PairedDifference d;
    d.n_samples = n_samples;
    const double ns = static_cast<double>(n_samples);
    for (std::size_t i = 0; i < n; ++i) {
        double plus = 0, minus = 0;
        for (const auto &f : flows) {
            plus += static_cast<double>(f.gains[i]);
            minus += static_cast<double>(f.losses[i]);
        }
        const double mean = (plus - minus) / ns;
        // Per-draw difference takes values +1, -1, 0.
        const double var = std::max(0.0, (plus + minus) / ns - mean * mean);
        d.difference.push_back(mean);
        d.standard_errors.push_back(std::sqrt(var / ns));
    }
    return d;
}

}  // namespace gtr
