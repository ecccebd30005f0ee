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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gtr/rational.h"

namespace gtr {

inline constexpr double kSumTolerance = 1e-12;
inline constexpr double kTieTolerance = 1e-12;

/// A point of the (N-1)-simplex in barycentric form. Used both for the
/// state of the measured entity and for a breaking point.
///
/// Outcomes are indexed from 0; outcome i corresponds to vertex i.
class BarycentricState {
   public:
    /// Throws DomainError unless N >= 2, every weight is >= 0 and the weights
    /// sum to 1 within kSumTolerance.
    explicit BarycentricState(std::vector<double> coords);

    static BarycentricState vertex(std::size_t n, std::size_t i);
    static BarycentricState centroid(std::size_t n);
    /// Rescales non-negative weights to unit sum.
    static BarycentricState normalized(std::vector<double> weights);

    std::size_t n_outcomes() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }

    std::string to_string() const;

    friend bool operator==(const BarycentricState &, const BarycentricState &) = default;

   private:
    std::vector<double> coords_;
};

/// Exact counterpart of BarycentricState; weights must sum to exactly 1.
class ExactBarycentricState {
   public:
    explicit ExactBarycentricState(std::vector<Rational> coords);

    std::size_t n_outcomes() const { return coords_.size(); }
    const Rational &operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }
    BarycentricState to_double() const;

   private:
    std::vector<Rational> coords_;
};

/// The collapse region A_i containing a breaking point, or the set of tied
/// outcomes when the point sits on a boundary between regions.
class RegionLabel {
   public:
    static RegionLabel outcome(std::size_t i);
    /// Requires at least two distinct indices.
    static RegionLabel boundary(std::vector<std::size_t> tied);

    bool is_boundary() const { return indices_.size() > 1; }
    /// The outcome; for a boundary, the lowest tied index.
    std::size_t resolved() const { return indices_.front(); }
    std::span<const std::size_t> indices() const { return indices_; }

    friend bool operator==(const RegionLabel &, const RegionLabel &) = default;

   private:
    explicit RegionLabel(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}
    std::vector<std::size_t> indices_;  // sorted ascending
};

/// Classifies the breaking point `lambda` for a particle at `x`.
///
/// lambda lies in A_i (the hull of the vertices with vertex i replaced by x)
/// exactly when i minimizes lambda_j / x_j, taking the ratio as +inf where
/// x_j = 0. Ratios within relative kTieTolerance of the minimum are ties.
RegionLabel region_of(const BarycentricState &lambda, const BarycentricState &x);

/// Same rule in exact arithmetic; ties are exact equalities.
RegionLabel region_of(const ExactBarycentricState &lambda, const ExactBarycentricState &x);

/// Orthonormal basis of the hyperplane sum(y) = 0, one row per internal axis.
///
/// For N = 2 the single axis is (1,-1)/sqrt2; for N = 3 the axes are
/// (0,-1,1)/sqrt2 and (2,-1,-1)/sqrt6. In general axis k < N-2 contrasts
/// coordinate k+2 against coordinates 1..k+1 (zero-based), and the last axis
/// contrasts coordinate 0 against all others.
std::vector<std::vector<double>> internal_basis(std::size_t n);

/// Coordinates of p along internal_basis(N); the dropped axis (1,...,1)/sqrtN
/// is constant 1/sqrtN on the simplex.
std::vector<double> to_internal_coords(const BarycentricState &p);

/// Inverse of to_internal_coords. Weights below -kSumTolerance mean the point
/// is outside the simplex and raise DomainError.
BarycentricState from_internal_coords(std::span<const double> z, std::size_t n);

/// Lebesgue measure of the (n-1)-simplex spanned by n orthonormal vectors:
/// sqrt(n) / (n-1)!.
double simplex_measure(std::size_t n);

/// Euclidean distance between two simplex points in the ambient space.
double distance(const BarycentricState &a, const BarycentricState &b);

}  // namespace gtr
