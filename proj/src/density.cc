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

#include "gtr/density.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtr/errors.h"
#include "overloaded.h"

namespace gtr {

using detail::Overloaded;

namespace {

constexpr std::uint64_t kMaxRejections = std::uint64_t{1} << 24;

double overlap(double lo, double hi, const Interval &iv) {
    return std::max(0.0, std::min(hi, iv.hi) - std::max(lo, iv.lo));
}

double interval_mass(double lo, double hi, const std::vector<Interval> &zone) {
    double total = 0;
    double inside = 0;
    for (const auto &iv : zone) {
        total += iv.length();
        inside += overlap(lo, hi, iv);
    }
    return inside / total;
}

void require_dimension(const BarycentricState &x, std::size_t n) {
    if (x.n_outcomes() != n) {
        throw DomainError("state has " + std::to_string(x.n_outcomes()) + " outcomes, density has " +
                          std::to_string(n));
    }
}

std::vector<double> two_outcome_split(double p0) {
    p0 = std::clamp(p0, 0.0, 1.0);
    return {p0, 1 - p0};
}

std::size_t pick_weighted(const std::vector<double> &cumulative, RngStream &rng) {
    const double u = rng.uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// CellularMask

CellularMask::CellularMask(std::vector<bool> breakable) : breakable_(std::move(breakable)) {
    n_breakable_ = static_cast<std::size_t>(std::count(breakable_.begin(), breakable_.end(), true));
    if (n_breakable_ == 0) {
        throw DomainError("a cellular mask needs at least one breakable cell");
    }
}

CellularMask CellularMask::all_breakable(std::size_t n_cells) { return CellularMask(std::vector<bool>(n_cells, true)); }

CellularMask CellularMask::from_bits(std::uint64_t bits, std::size_t n_cells) {
    if (n_cells == 0 || n_cells > 64) {
        throw DomainError("bit masks hold 1..64 cells");
    }
    std::vector<bool> b(n_cells);
    for (std::size_t c = 0; c < n_cells; ++c) {
        b[c] = (bits >> c) & 1;
    }
    return CellularMask(std::move(b));
}

CellularMask CellularMask::parse(const std::string &cells) {
    std::vector<bool> b;
    b.reserve(cells.size());
    for (char ch : cells) {
        if (ch == 'b' || ch == 'B') {
            b.push_back(true);
        } else if (ch == 'u' || ch == 'U') {
            b.push_back(false);
        } else {
            throw DomainError(std::string("mask characters must be 'b' or 'u', got '") + ch + "'");
        }
    }
    return CellularMask(std::move(b));
}

std::string CellularMask::to_string() const {
    std::string s;
    s.reserve(breakable_.size());
    for (bool b : breakable_) {
        s.push_back(b ? 'b' : 'u');
    }
    return s;
}

// ---------------------------------------------------------------------------
// Cellular1D

Cellular1D::Cellular1D(CellularMask mask) : mask_(std::move(mask)) {
    breakable_cells_.reserve(mask_.n_breakable());
    for (std::size_t c = 0; c < mask_.n_cells(); ++c) {
        if (mask_.breakable(c)) {
            breakable_cells_.push_back(static_cast<std::uint32_t>(c));
        }
    }
}

double Cellular1D::density_value() const {
    const double n = static_cast<double>(mask_.n_cells());
    return 1.0 / (static_cast<double>(mask_.n_breakable()) * std::numbers::sqrt2 / n);
}

double Cellular1D::mass_below(double t) const {
    const std::size_t n = mask_.n_cells();
    const double s = std::clamp(t, 0.0, 1.0) * static_cast<double>(n);
    const auto full = std::min<std::size_t>(static_cast<std::size_t>(std::floor(s)), n);
    double cells = 0;
    for (std::size_t c = 0; c < full; ++c) {
        cells += mask_.breakable(c);
    }
    if (full < n && mask_.breakable(full)) {
        cells += s - static_cast<double>(full);
    }
    return cells / static_cast<double>(mask_.n_breakable());
}

Rational Cellular1D::mass_below(const Rational &t) const {
    const std::size_t n = mask_.n_cells();
    Rational s = t * n;
    if (s <= 0) {
        return 0;
    }
    if (s >= n) {
        return 1;
    }
    const BigInt whole = boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s);
    const auto full = static_cast<std::size_t>(whole);
    Rational cells = 0;
    for (std::size_t c = 0; c < full; ++c) {
        cells += mask_.breakable(c) ? 1 : 0;
    }
    if (mask_.breakable(full)) {
        cells += s - Rational(whole);
    }
    return cells / mask_.n_breakable();
}

BarycentricState Cellular1D::sample(RngStream &rng) const {
    const auto cell = breakable_cells_[rng.below(breakable_cells_.size())];
    const double t = (static_cast<double>(cell) + rng.uniform()) / static_cast<double>(mask_.n_cells());
    return BarycentricState({t, 1 - t});
}

std::vector<Rational> region_probabilities_exact(const Cellular1D &band, const Rational &x0) {
    if (x0 < 0 || x0 > 1) {
        throw DomainError("x0 must lie in [0, 1]");
    }
    Rational p0 = band.mass_below(x0);
    return {p0, Rational(1) - p0};
}

// ---------------------------------------------------------------------------
// CellularGrid

CellularGrid::CellularGrid(std::size_t n_outcomes, std::size_t resolution, std::vector<bool> breakable)
    : n_(n_outcomes), resolution_(resolution), breakable_(std::move(breakable)) {
    if (n_ < 2) {
        throw DomainError("grid density needs N >= 2");
    }
    if (resolution_ == 0) {
        throw DomainError("grid resolution must be positive");
    }
    const std::size_t d = n_ - 1;
    std::size_t cells = 1;
    for (std::size_t k = 0; k < d; ++k) {
        cells *= resolution_;
    }
    if (breakable_.size() != cells) {
        throw DomainError("grid mask needs resolution^(N-1) = " + std::to_string(cells) + " entries");
    }
    per_axis_subsamples_ =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(std::pow(4096.0, 1.0 / static_cast<double>(d)))));

    basis_ = internal_basis(n_);
    box_lo_.assign(d, 0);
    box_width_.assign(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        auto [lo, hi] = std::minmax_element(basis_[k].begin(), basis_[k].end());
        box_lo_[k] = *lo;
        box_width_[k] = (*hi - *lo) / static_cast<double>(resolution_);
    }

    double cell_volume = 1;
    for (double w : box_width_) {
        cell_volume *= w;
    }
    const std::size_t n_corners = std::size_t{1} << d;
    weight_.assign(cells, 0.0);
    double total = 0;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const auto lo = cell_lower_corner(cell);
        bool all_inside = true;
        std::vector<bool> facet_negative(n_, true);
        std::vector<double> corner(d);
        for (std::size_t mask = 0; mask < n_corners; ++mask) {
            for (std::size_t k = 0; k < d; ++k) {
                corner[k] = lo[k] + (((mask >> k) & 1) ? box_width_[k] : 0.0);
            }
            auto y = barycentric_of(corner);
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j] < 0) {
                    all_inside = false;
                } else {
                    facet_negative[j] = false;
                }
            }
        }
        double w = 0;
        if (all_inside) {
            w = cell_volume;
        } else if (std::find(facet_negative.begin(), facet_negative.end(), true) == facet_negative.end()) {
            std::size_t total_pts = 1;
            for (std::size_t k = 0; k < d; ++k) {
                total_pts *= per_axis_subsamples_;
            }
            w = cell_volume * static_cast<double>(inside_subsample(cell).size()) / static_cast<double>(total_pts);
        }
        weight_[cell] = w;
        if (breakable_[cell] && w > 0) {
            total += w;
            cumulative_.push_back(total);
            breakable_index_.push_back(cell);
        }
    }
    if (cumulative_.empty()) {
        throw DomainError("grid mask has no breakable cell intersecting the simplex");
    }
}

std::vector<double> CellularGrid::cell_lower_corner(std::size_t cell) const {
    const std::size_t d = n_ - 1;
    std::vector<double> lo(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = box_lo_[k] + static_cast<double>(cell % resolution_) * box_width_[k];
        cell /= resolution_;
    }
    return lo;
}

std::vector<double> CellularGrid::barycentric_of(std::span<const double> z) const {
    std::vector<double> y(n_, 1.0 / static_cast<double>(n_));
    for (std::size_t k = 0; k < z.size(); ++k) {
        for (std::size_t j = 0; j < n_; ++j) {
            y[j] += z[k] * basis_[k][j];
        }
    }
    return y;
}

std::vector<BarycentricState> CellularGrid::inside_subsample(std::size_t cell) const {
    const std::size_t d = n_ - 1;
    const std::size_t q = per_axis_subsamples_;
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) {
        total *= q;
    }
    const auto lo = cell_lower_corner(cell);
    std::vector<BarycentricState> out;
    std::vector<double> z(d);
    for (std::size_t s = 0; s < total; ++s) {
        std::size_t r = s;
        for (std::size_t k = 0; k < d; ++k) {
            z[k] = lo[k] + (static_cast<double>(r % q) + 0.5) / static_cast<double>(q) * box_width_[k];
            r /= q;
        }
        auto y = barycentric_of(z);
        if (std::all_of(y.begin(), y.end(), [](double v) { return v >= 0; })) {
            out.push_back(BarycentricState::normalized(std::move(y)));
        }
    }
    return out;
}

BarycentricState CellularGrid::sample(RngStream &rng) const {
    const std::size_t cell = breakable_index_[pick_weighted(cumulative_, rng)];
    const auto lo = cell_lower_corner(cell);
    std::vector<double> z(n_ - 1);
    for (std::uint64_t attempt = 0; attempt < kMaxRejections; ++attempt) {
        for (std::size_t k = 0; k < z.size(); ++k) {
            z[k] = lo[k] + rng.uniform() * box_width_[k];
        }
        auto y = barycentric_of(z);
        if (std::all_of(y.begin(), y.end(), [](double v) { return v >= 0; })) {
            return BarycentricState::normalized(std::move(y));
        }
    }
    throw std::runtime_error("grid cell sampler exceeded its rejection budget");
}

std::vector<double> CellularGrid::region_probabilities(const BarycentricState &x) const {
    require_dimension(x, n_);
    std::vector<double> p(n_, 0.0);
    for (std::size_t cell : breakable_index_) {
        auto pts = inside_subsample(cell);
        if (pts.empty()) {
            // Weight came from exact corners but every midpoint rounded out.
            pts.push_back(BarycentricState::centroid(n_));
        }
        const double share = weight_[cell] / static_cast<double>(pts.size());
        for (const auto &pt : pts) {
            p[region_of(pt, x).resolved()] += share;
        }
    }
    const double total = cumulative_.back();
    for (double &v : p) {
        v /= total;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Density

Density::Density(Variant v) : v_(std::move(v)) {
    std::visit(Overloaded{
                   [](const UniformDensity &u) {
                       if (u.n_outcomes < 2) {
                           throw DomainError("uniform density needs N >= 2");
                       }
                   },
                   [](const DiracMixture &d) {
                       if (d.points.empty() || d.points.size() != d.weights.size()) {
                           throw DomainError("Dirac mixture needs one weight per point");
                       }
                       double sum = 0;
                       for (std::size_t a = 0; a < d.points.size(); ++a) {
                           if (d.points[a].n_outcomes() != d.points.front().n_outcomes()) {
                               throw DomainError("Dirac points differ in dimension");
                           }
                           if (!(d.weights[a] > 0)) {
                               throw DomainError("Dirac weights must be positive");
                           }
                           sum += d.weights[a];
                       }
                       if (std::abs(sum - 1) > kSumTolerance) {
                           throw DomainError("Dirac weights must sum to 1");
                       }
                   },
                   [](const Truncated &t) {
                       if (!t.base || t.base->n_outcomes() != t.control.n_outcomes()) {
                           throw DomainError("truncation base and control region differ in dimension");
                       }
                   },
                   [](const auto &) {},
               },
               v_);
}

Density Density::uniform(std::size_t n_outcomes) { return Density(UniformDensity{n_outcomes}); }

Density Density::cellular_1d(CellularMask mask) { return Density(Cellular1D(std::move(mask))); }

Density Density::cellular_grid(std::size_t n_outcomes, std::size_t resolution, std::vector<bool> breakable) {
    return Density(CellularGrid(n_outcomes, resolution, std::move(breakable)));
}

Density Density::truncated_uniform(ControlRegion control) { return Density(TruncatedUniform{std::move(control)}); }

Density Density::dirac(std::vector<BarycentricState> points, std::vector<double> weights) {
    if (weights.empty()) {
        weights.assign(points.size(), points.empty() ? 0.0 : 1.0 / static_cast<double>(points.size()));
    }
    return Density(DiracMixture{std::move(points), std::move(weights)});
}

std::size_t Density::n_outcomes() const {
    return std::visit(Overloaded{
                          [](const UniformDensity &u) { return u.n_outcomes; },
                          [](const Cellular1D &) { return std::size_t{2}; },
                          [](const CellularGrid &g) { return g.n_outcomes(); },
                          [](const TruncatedUniform &t) { return t.control.n_outcomes(); },
                          [](const DiracMixture &d) { return d.points.front().n_outcomes(); },
                          [](const Truncated &t) { return t.control.n_outcomes(); },
                      },
                      v_);
}

std::string Density::kind() const {
    return std::visit(Overloaded{
                          [](const UniformDensity &) { return std::string("uniform"); },
                          [](const Cellular1D &) { return std::string("cellular_1d"); },
                          [](const CellularGrid &) { return std::string("cellular_grid"); },
                          [](const TruncatedUniform &) { return std::string("truncated_uniform"); },
                          [](const DiracMixture &) { return std::string("dirac"); },
                          [](const Truncated &) { return std::string("truncated"); },
                      },
                      v_);
}

BarycentricState Density::sample(RngStream &rng) const {
    return std::visit(
        Overloaded{
            [&](const UniformDensity &u) { return sample_uniform_simplex(u.n_outcomes, rng); },
            [&](const Cellular1D &c) { return c.sample(rng); },
            [&](const CellularGrid &g) { return g.sample(rng); },
            [&](const TruncatedUniform &t) {
                if (t.control.has_direct_sampler()) {
                    return t.control.sample_kept(rng);
                }
                for (std::uint64_t attempt = 0; attempt < kMaxRejections; ++attempt) {
                    auto lambda = sample_uniform_simplex(t.control.n_outcomes(), rng);
                    if (t.control.keeps(lambda)) {
                        return lambda;
                    }
                }
                throw std::runtime_error("truncated sampler exceeded its rejection budget");
            },
            [&](const DiracMixture &d) {
                if (d.points.size() == 1) {
                    return d.points.front();
                }
                double u = rng.uniform();
                for (std::size_t a = 0; a + 1 < d.points.size(); ++a) {
                    u -= d.weights[a];
                    if (u < 0) {
                        return d.points[a];
                    }
                }
                return d.points.back();
            },
            [&](const Truncated &t) {
                for (std::uint64_t attempt = 0; attempt < kMaxRejections; ++attempt) {
                    auto lambda = t.base->sample(rng);
                    if (t.control.keeps(lambda)) {
                        return lambda;
                    }
                }
                throw std::runtime_error("truncated sampler exceeded its rejection budget");
            },
        },
        v_);
}

double Density::mass_1d(double lo, double hi) const {
    if (n_outcomes() != 2) {
        throw NotAnalyticError("one-dimensional mass requires N = 2");
    }
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    if (hi < lo) {
        return 0;
    }
    return std::visit(Overloaded{
                          [&](const UniformDensity &) { return hi - lo; },
                          [&](const Cellular1D &c) { return c.mass_below(hi) - c.mass_below(lo); },
                          [&](const CellularGrid &) -> double {
                              throw NotAnalyticError("grid densities have no closed-form mass");
                          },
                          [&](const TruncatedUniform &t) {
                              return interval_mass(lo, hi, t.control.kept_intervals_1d());
                          },
                          [&](const DiracMixture &d) {
                              double m = 0;
                              for (std::size_t a = 0; a < d.points.size(); ++a) {
                                  if (d.points[a][0] >= lo && d.points[a][0] <= hi) {
                                      m += d.weights[a];
                                  }
                              }
                              return m;
                          },
                          [&](const Truncated &t) {
                              double m = 0;
                              for (const auto &iv : t.control.kept_intervals_1d()) {
                                  const double a = std::max(lo, iv.lo);
                                  const double b = std::min(hi, iv.hi);
                                  if (b > a) {
                                      m += t.base->mass_1d(a, b);
                                  }
                              }
                              return m / t.retained_mass;
                          },
                      },
                      v_);
}

std::vector<double> Density::region_probabilities(const BarycentricState &x) const {
    require_dimension(x, n_outcomes());
    return std::visit(
        Overloaded{
            [&](const UniformDensity &) { return std::vector<double>(x.coords().begin(), x.coords().end()); },
            [&](const Cellular1D &c) { return two_outcome_split(c.mass_below(x[0])); },
            [&](const CellularGrid &g) { return g.region_probabilities(x); },
            [&](const TruncatedUniform &t) {
                if (t.control.is_trivial()) {
                    return std::vector<double>(x.coords().begin(), x.coords().end());
                }
                if (x.n_outcomes() != 2 || !t.control.has_direct_sampler()) {
                    throw NotAnalyticError("truncated uniform densities are closed-form only for N = 2");
                }
                return two_outcome_split(interval_mass(0, x[0], t.control.kept_intervals_1d()));
            },
            [&](const DiracMixture &d) {
                std::vector<double> p(x.n_outcomes(), 0.0);
                for (std::size_t a = 0; a < d.points.size(); ++a) {
                    p[region_of(d.points[a], x).resolved()] += d.weights[a];
                }
                return p;
            },
            [&](const Truncated &t) {
                if (x.n_outcomes() != 2 || !t.control.has_direct_sampler() || !t.retained_mass_exact) {
                    throw NotAnalyticError("truncated densities are closed-form only for N = 2");
                }
                return two_outcome_split(mass_1d(0, x[0]));
            },
        },
        v_);
}

double Density::region_probability(const BarycentricState &x, std::size_t i) const {
    if (i >= n_outcomes()) {
        throw DomainError("outcome index out of range");
    }
    return region_probabilities(x)[i];
}

Density truncate(const Density &rho, const ControlRegion &control) {
    if (rho.n_outcomes() != control.n_outcomes()) {
        throw DomainError("density and control region differ in dimension");
    }
    if (control.is_trivial()) {
        return rho;
    }
    if (std::holds_alternative<UniformDensity>(rho.variant())) {
        return Density::truncated_uniform(control);
    }
    if (const auto *d = std::get_if<DiracMixture>(&rho.variant())) {
        std::vector<BarycentricState> pts;
        std::vector<double> w;
        double kept = 0;
        for (std::size_t a = 0; a < d->points.size(); ++a) {
            if (control.keeps(d->points[a])) {
                pts.push_back(d->points[a]);
                w.push_back(d->weights[a]);
                kept += d->weights[a];
            }
        }
        if (pts.empty()) {
            throw DegenerateTruncationError("control region contains every Dirac point");
        }
        for (double &v : w) {
            v /= kept;
        }
        return Density::dirac(std::move(pts), std::move(w));
    }

    double retained = 0;
    bool exact = false;
    if (rho.n_outcomes() == 2 && control.has_direct_sampler()) {
        try {
            for (const auto &iv : control.kept_intervals_1d()) {
                retained += rho.mass_1d(iv.lo, iv.hi);
            }
            exact = true;
        } catch (const NotAnalyticError &) {
            retained = 0;
        }
    }
    if (!exact) {
        // Fixed stream so the estimate is part of the density's identity.
        RngStream rng(0, 0);
        constexpr std::uint64_t kDraws = std::uint64_t{1} << 18;
        std::uint64_t kept = 0;
        for (std::uint64_t s = 0; s < kDraws; ++s) {
            kept += control.keeps(rho.sample(rng));
        }
        retained = static_cast<double>(kept) / static_cast<double>(kDraws);
    }
    if (!(retained > 0)) {
        throw DegenerateTruncationError("control region absorbs all of the density's mass");
    }
    return Density(Truncated{std::make_shared<const Density>(rho), control, retained, exact});
}

}  // namespace gtr
