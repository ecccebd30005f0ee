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
#include <variant>
#include <vector>

#include "gtr/rng.h"
#include "gtr/simplex.h"

namespace gtr {

/// Closed interval of the first barycentric weight, used for N = 2 geometry.
struct Interval {
    double lo = 0;
    double hi = 0;
    double length() const { return hi > lo ? hi - lo : 0.0; }
};

/// Breakable zone is the copy of the simplex shrunk about its centroid to a
/// fraction epsilon of the full measure.
struct KeepScaledSimplex {
    double epsilon = 1;
};

/// Breakable zone is {lambda : lambda[coord] >= c} with c = 1 - epsilon^(1/(N-1)),
/// i.e. the control region is a half-space cut parallel to a facet.
struct KeepCoordinateCut {
    std::size_t coord = 0;
    double epsilon = 1;
};

/// Breakable zone is k disjoint (N-1)-balls, each of measure
/// (epsilon / k) * simplex_measure(N), centred on the given points.
struct KeepBalls {
    std::vector<BarycentricState> centers;
    double epsilon = 1;
};

/// Arbitrary breakable zone. Only usable through rejection sampling;
/// `epsilon` is the caller's stated breakable fraction and is informational.
struct KeepPredicate {
    std::function<bool(const BarycentricState &)> keep;
    double epsilon = 1;
    std::string description = "predicate";
};

/// The experimenter's control region C^epsilon, stored through its
/// complement (the zone that stays breakable), whose measure is
/// epsilon * simplex_measure(N).
class ControlRegion {
   public:
    using Geometry = std::variant<KeepScaledSimplex, KeepCoordinateCut, KeepBalls, KeepPredicate>;

    /// Validates epsilon in (0, 1] and the geometry (balls inside the simplex
    /// and pairwise disjoint). Throws DomainError.
    ControlRegion(std::size_t n_outcomes, Geometry geometry);

    std::size_t n_outcomes() const { return n_; }
    double epsilon() const;
    const Geometry &geometry() const { return geometry_; }
    /// True when the breakable zone is the whole simplex.
    bool is_trivial() const;

    bool keeps(const BarycentricState &lambda) const;
    bool in_control(const BarycentricState &lambda) const { return !keeps(lambda); }

    /// Whether sample_kept draws directly (false only for predicates).
    bool has_direct_sampler() const;
    /// Uniform point of the breakable zone. Throws NotAnalyticError for
    /// predicate geometry.
    BarycentricState sample_kept(RngStream &rng) const;

    /// Breakable zone as disjoint sorted intervals of lambda[0]; N = 2 only.
    /// Throws NotAnalyticError otherwise.
    std::vector<Interval> kept_intervals_1d() const;

    /// Euclidean radius of each ball (KeepBalls only).
    double ball_radius() const;

    std::string describe() const;

   private:
    std::size_t n_;
    Geometry geometry_;
    double scale_ = 1;  // homothety factor epsilon^(1/(N-1)) or ball radius
};

/// Measure of the unit (d)-ball.
double unit_ball_measure(std::size_t d);

}  // namespace gtr
