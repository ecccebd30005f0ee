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

#include "gtr/rng.h"

#include <cmath>
#include <limits>
#include <vector>

namespace gtr {

RngStream::RngStream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
}

std::uint64_t RngStream::below(std::uint64_t bound) {
    // Discard the top partial block of 2^64 so the modulo is unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

double RngStream::exponential() { return -std::log1p(-uniform()); }

double RngStream::normal() {
    if (spare_normal_) {
        double v = *spare_normal_;
        spare_normal_.reset();
        return v;
    }
    double u, v, s;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    double f = std::sqrt(-2 * std::log(s) / s);
    spare_normal_ = v * f;
    return u * f;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BarycentricState sample_uniform_simplex(std::size_t n, RngStream &rng) {
    std::vector<double> w(n);
    double sum = 0;
    for (double &v : w) {
        v = rng.exponential();
        sum += v;
    }
    if (sum == 0) {  // every draw was exactly 0; probability ~2^-53n
        w.assign(n, 1.0);
        sum = static_cast<double>(n);
    }
    for (double &v : w) {
        v /= sum;
    }
    return BarycentricState(std::move(w));
}

}  // namespace gtr
