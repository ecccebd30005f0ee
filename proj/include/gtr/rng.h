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
#include <optional>
#include <random>

#include "gtr/simplex.h"

namespace gtr {

/// A reproducible random stream identified by (seed, stream index).
///
/// Splitting rule: the stream is a 64-bit Mersenne Twister initialized with
/// std::seed_seq{lo32(seed), hi32(seed), lo32(index), hi32(index)}. Both
/// algorithms are fully specified by the C++ standard, so a given
/// (seed, index) pair yields the same sequence on every conforming platform.
/// Variates are derived from raw 64-bit words by the methods below rather
/// than by the implementation-defined <random> distributions.
///
/// A stream is not thread-safe; give each worker its own index.
class RngStream {
   public:
    RngStream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Unit-rate exponential variate.
    double exponential();
    /// Standard normal variate (Marsaglia polar method).
    double normal();

   private:
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

/// Derives an independent seed for a named sub-experiment (SplitMix64 mix of
/// seed and tag). Used when one run needs several seeded estimates.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Uniform point on the (n-1)-simplex: normalized unit exponentials, i.e. a
/// flat Dirichlet draw.
BarycentricState sample_uniform_simplex(std::size_t n, RngStream &rng);

}  // namespace gtr
