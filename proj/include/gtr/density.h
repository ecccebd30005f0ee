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
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gtr/control_region.h"
#include "gtr/rational.h"
#include "gtr/rng.h"
#include "gtr/simplex.h"

namespace gtr {

/// Breakable (true) / unbreakable (false) flag per cell of a tessellation.
/// At least one cell must be breakable.
class CellularMask {
   public:
    explicit CellularMask(std::vector<bool> breakable);
    static CellularMask all_breakable(std::size_t n_cells);
    /// Bit c of `bits` is cell c. n_cells <= 64.
    static CellularMask from_bits(std::uint64_t bits, std::size_t n_cells);
    /// One character per cell: 'b' breakable, 'u' unbreakable.
    static CellularMask parse(const std::string &cells);

    std::size_t n_cells() const { return breakable_.size(); }
    std::size_t n_breakable() const { return n_breakable_; }
    bool breakable(std::size_t cell) const { return breakable_[cell]; }
    std::string to_string() const;

   private:
    std::vector<bool> breakable_;
    std::size_t n_breakable_ = 0;
};

struct UniformDensity {
    std::size_t n_outcomes = 2;
};

/// Cellular elastic band on S_1 (N = 2). Cell c covers
/// lambda[0] in [c/n_c, (c+1)/n_c]; in the internal coordinate
/// z = (lambda[0] - lambda[1]) / sqrt2 the cells run left to right from the
/// vertex of outcome 1 (z = -1/sqrt2) to the vertex of outcome 0.
/// The density is 1 / (n_breakable * sqrt2 / n_c) on breakable cells.
class Cellular1D {
   public:
    explicit Cellular1D(CellularMask mask);

    const CellularMask &mask() const { return mask_; }
    double density_value() const;
    /// Probability mass of lambda[0] in [0, t].
    double mass_below(double t) const;
    Rational mass_below(const Rational &t) const;
    BarycentricState sample(RngStream &rng) const;

   private:
    CellularMask mask_;
    std::vector<std::uint32_t> breakable_cells_;
};

/// Cellular density on a regular grid over the bounding box of the simplex
/// in internal coordinates. Cells partially outside the simplex are weighted
/// by the measure of their intersection with it; the mask has
/// resolution^(N-1) entries, axis 0 varying fastest.
class CellularGrid {
   public:
    CellularGrid(std::size_t n_outcomes, std::size_t resolution, std::vector<bool> breakable);

    std::size_t n_outcomes() const { return n_; }
    std::size_t resolution() const { return resolution_; }
    std::size_t n_cells() const { return breakable_.size(); }
    bool breakable(std::size_t cell) const { return breakable_[cell]; }
    /// Measure of cell intersected with the simplex (stratified estimate for
    /// cells crossing the boundary, exact otherwise).
    double cell_weight(std::size_t cell) const { return weight_[cell]; }
    /// Midpoints of the stratified subsample of a cell that lie in the simplex.
    std::vector<BarycentricState> inside_subsample(std::size_t cell) const;

    BarycentricState sample(RngStream &rng) const;
    std::vector<double> region_probabilities(const BarycentricState &x) const;

   private:
    std::vector<double> cell_lower_corner(std::size_t cell) const;
    std::vector<double> barycentric_of(std::span<const double> z) const;

    std::size_t n_;
    std::size_t resolution_;
    std::size_t per_axis_subsamples_;
    std::vector<bool> breakable_;
    std::vector<double> box_lo_, box_width_;
    std::vector<std::vector<double>> basis_;
    std::vector<double> weight_;
    std::vector<double> cumulative_;  // over breakable cells
    std::vector<std::size_t> breakable_index_;
};

/// Uniform density on the breakable zone of a control region:
/// (N-1)! / (epsilon sqrtN) outside C^epsilon, zero inside.
struct TruncatedUniform {
    ControlRegion control;
};

/// Finite mixture of point masses.
struct DiracMixture {
    std::vector<BarycentricState> points;
    std::vector<double> weights;  // sums to 1
};

class Density;

/// A non-uniform density truncated to the breakable zone of a control region
/// and renormalized.
struct Truncated {
    std::shared_ptr<const Density> base;
    ControlRegion control;
    double retained_mass = 1;    // integral of base outside C^epsilon
    bool retained_mass_exact = true;
};

/// Probability density over S_{N-1} from which breaking points are drawn.
/// Immutable; sampling takes an explicit stream.
class Density {
   public:
    using Variant = std::variant<UniformDensity, Cellular1D, CellularGrid, TruncatedUniform, DiracMixture, Truncated>;

    explicit Density(Variant v);

    static Density uniform(std::size_t n_outcomes);
    static Density cellular_1d(CellularMask mask);
    static Density cellular_grid(std::size_t n_outcomes, std::size_t resolution, std::vector<bool> breakable);
    static Density truncated_uniform(ControlRegion control);
    /// Equal weights when `weights` is empty.
    static Density dirac(std::vector<BarycentricState> points, std::vector<double> weights = {});

    std::size_t n_outcomes() const;
    const Variant &variant() const { return v_; }
    std::string kind() const;

    BarycentricState sample(RngStream &rng) const;

    /// Integral of the density over each region A_i(x). Closed form for
    /// uniform, cellular 1-D, Dirac mixtures and N = 2 truncations; per-cell
    /// attribution for grids. Throws NotAnalyticError otherwise.
    std::vector<double> region_probabilities(const BarycentricState &x) const;
    double region_probability(const BarycentricState &x, std::size_t i) const;

    /// Mass of lambda[0] in [lo, hi] for N = 2 densities with a closed form.
    double mass_1d(double lo, double hi) const;

   private:
    Variant v_;
};

/// Zero on the control region, rescaled by 1 / (1 - mass(C)) elsewhere.
/// A trivial control region returns rho unchanged. Throws
/// DegenerateTruncationError when no mass survives.
Density truncate(const Density &rho, const ControlRegion &control);

/// Exact transition probabilities of a cellular band for a particle with
/// first weight x0; returns {P(-> outcome 0), P(-> outcome 1)}.
std::vector<Rational> region_probabilities_exact(const Cellular1D &band, const Rational &x0);

}  // namespace gtr
