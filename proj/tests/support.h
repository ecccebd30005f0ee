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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gtr/simplex.h"

namespace gtr::testing {

/// Test-side generator, deliberately separate from the library's RngStream.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
    std::uint64_t bits() { return engine_(); }

    /// Random simplex point by sorting uniforms (spacings method).
    BarycentricState state(std::size_t n) {
        std::vector<double> cut(n - 1);
        for (double &c : cut) {
            c = uniform();
        }
        std::sort(cut.begin(), cut.end());
        std::vector<double> w(n);
        double prev = 0;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            w[j] = cut[j] - prev;
            prev = cut[j];
        }
        w[n - 1] = 1 - prev;
        return BarycentricState::normalized(std::move(w));
    }

    /// State whose weights are all at least `floor`.
    BarycentricState interior_state(std::size_t n, double floor) {
        auto s = state(n);
        std::vector<double> w(n);
        const double scale = 1 - floor * static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = floor + scale * s[j];
        }
        return BarycentricState::normalized(std::move(w));
    }

    /// State with a random subset of weights set to zero (at least one kept).
    BarycentricState sparse_state(std::size_t n) {
        auto s = state(n);
        std::vector<double> w(s.coords().begin(), s.coords().end());
        const std::size_t keep = index(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != keep && uniform() < 0.3) {
                w[j] = 0;
            }
        }
        return BarycentricState::normalized(std::move(w));
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace gtr::testing
