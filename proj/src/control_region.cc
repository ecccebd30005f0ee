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

#include "gtr/control_region.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gtr/errors.h"
#include "overloaded.h"

namespace gtr {

namespace {

using detail::Overloaded;

// Distance from an interior point to the facet lambda_j = 0, measured inside
// the simplex hyperplane.
double facet_distance(const BarycentricState &p, std::size_t j) {
    const double n = static_cast<double>(p.n_outcomes());
    return p[j] * std::sqrt(n / (n - 1));
}

}  // namespace

double unit_ball_measure(std::size_t d) {
    const double h = static_cast<double>(d) / 2;
    return std::pow(std::numbers::pi, h) / std::tgamma(h + 1);
}

ControlRegion::ControlRegion(std::size_t n_outcomes, Geometry geometry) : n_(n_outcomes), geometry_(std::move(geometry)) {
    if (n_ < 2) {
        throw DomainError("control region needs N >= 2");
    }
    const double eps = epsilon();
    if (!(eps > 0 && eps <= 1)) {
        throw DomainError("epsilon must lie in (0, 1]");
    }
    const double dim = static_cast<double>(n_ - 1);
    std::visit(Overloaded{
                   [&](const KeepScaledSimplex &) { scale_ = std::pow(eps, 1 / dim); },
                   [&](const KeepCoordinateCut &g) {
                       if (g.coord >= n_) {
                           throw DomainError("cut coordinate out of range");
                       }
                       scale_ = std::pow(eps, 1 / dim);
                   },
                   [&](const KeepBalls &g) {
                       if (g.centers.empty()) {
                           throw DomainError("at least one ball centre required");
                       }
                       const double k = static_cast<double>(g.centers.size());
                       const double volume = eps / k * simplex_measure(n_);
                       scale_ = std::pow(volume / unit_ball_measure(n_ - 1), 1 / dim);
                       for (std::size_t a = 0; a < g.centers.size(); ++a) {
                           const auto &c = g.centers[a];
                           if (c.n_outcomes() != n_) {
                               throw DomainError("ball centre dimension mismatch");
                           }
                           for (std::size_t j = 0; j < n_; ++j) {
                               if (facet_distance(c, j) < scale_ * (1 - 1e-12)) {
                                   throw DomainError("ball around " + c.to_string() + " leaves the simplex at epsilon " +
                                                     std::to_string(eps));
                               }
                           }
                           for (std::size_t b = 0; b < a; ++b) {
                               if (distance(c, g.centers[b]) < 2 * scale_) {
                                   throw DomainError("balls overlap at epsilon " + std::to_string(eps));
                               }
                           }
                       }
                   },
                   [&](const KeepPredicate &g) {
                       if (!g.keep) {
                           throw DomainError("empty predicate");
                       }
                   },
               },
               geometry_);
}

double ControlRegion::epsilon() const {
    return std::visit([](const auto &g) { return g.epsilon; }, geometry_);
}

bool ControlRegion::is_trivial() const {
    if (epsilon() < 1) {
        return false;
    }
    return std::holds_alternative<KeepScaledSimplex>(geometry_) || std::holds_alternative<KeepCoordinateCut>(geometry_);
}

bool ControlRegion::keeps(const BarycentricState &lambda) const {
    return std::visit(Overloaded{
                          [&](const KeepScaledSimplex &) {
                              const double floor = (1 - scale_) / static_cast<double>(n_);
                              for (double c : lambda.coords()) {
                                  if (c < floor) {
                                      return false;
                                  }
                              }
                              return true;
                          },
                          [&](const KeepCoordinateCut &g) { return lambda[g.coord] >= 1 - scale_; },
                          [&](const KeepBalls &g) {
                              for (const auto &c : g.centers) {
                                  if (distance(lambda, c) <= scale_) {
                                      return true;
                                  }
                              }
                              return false;
                          },
                          [&](const KeepPredicate &g) { return g.keep(lambda); },
                      },
                      geometry_);
}

bool ControlRegion::has_direct_sampler() const { return !std::holds_alternative<KeepPredicate>(geometry_); }

BarycentricState ControlRegion::sample_kept(RngStream &rng) const {
    return std::visit(
        Overloaded{
            [&](const KeepScaledSimplex &) {
                auto y = sample_uniform_simplex(n_, rng);
                const double shift = (1 - scale_) / static_cast<double>(n_);
                std::vector<double> c(y.coords().begin(), y.coords().end());
                for (double &v : c) {
                    v = shift + scale_ * v;
                }
                return BarycentricState::normalized(std::move(c));
            },
            [&](const KeepCoordinateCut &g) {
                auto y = sample_uniform_simplex(n_, rng);
                std::vector<double> c(y.coords().begin(), y.coords().end());
                for (double &v : c) {
                    v *= scale_;
                }
                c[g.coord] += 1 - scale_;
                return BarycentricState::normalized(std::move(c));
            },
            [&](const KeepBalls &g) {
                const auto &center = g.centers[rng.below(g.centers.size())];
                const std::size_t d = n_ - 1;
                std::vector<double> dir(d);
                double norm = 0;
                do {
                    norm = 0;
                    for (double &v : dir) {
                        v = rng.normal();
                        norm += v * v;
                    }
                } while (norm == 0);
                norm = std::sqrt(norm);
                const double radius = scale_ * std::pow(rng.uniform(), 1 / static_cast<double>(d));
                std::vector<double> c(center.coords().begin(), center.coords().end());
                const auto basis = internal_basis(n_);
                for (std::size_t k = 0; k < d; ++k) {
                    const double step = radius * dir[k] / norm;
                    for (std::size_t j = 0; j < n_; ++j) {
                        c[j] += step * basis[k][j];
                    }
                }
                for (double &v : c) {
                    v = std::max(v, 0.0);
                }
                return BarycentricState::normalized(std::move(c));
            },
            [&](const KeepPredicate &) -> BarycentricState {
                throw NotAnalyticError("predicate control regions have no direct sampler");
            },
        },
        geometry_);
}

std::vector<Interval> ControlRegion::kept_intervals_1d() const {
    if (n_ != 2) {
        throw NotAnalyticError("interval geometry is only defined for N = 2");
    }
    return std::visit(Overloaded{
                          [&](const KeepScaledSimplex &g) -> std::vector<Interval> {
                              const double a = (1 - g.epsilon) / 2;
                              return {{a, 1 - a}};
                          },
                          [&](const KeepCoordinateCut &g) -> std::vector<Interval> {
                              if (g.coord == 0) {
                                  return {{1 - g.epsilon, 1}};
                              }
                              return {{0, g.epsilon}};
                          },
                          [&](const KeepBalls &g) -> std::vector<Interval> {
                              // Euclidean length along S_1 is sqrt2 times the change in lambda[0].
                              const double half = scale_ / std::numbers::sqrt2;
                              std::vector<Interval> out;
                              for (const auto &c : g.centers) {
                                  out.push_back({c[0] - half, c[0] + half});
                              }
                              std::sort(out.begin(), out.end(), [](auto &a, auto &b) { return a.lo < b.lo; });
                              return out;
                          },
                          [&](const KeepPredicate &) -> std::vector<Interval> {
                              throw NotAnalyticError("predicate control regions have no interval form");
                          },
                      },
                      geometry_);
}

double ControlRegion::ball_radius() const {
    if (!std::holds_alternative<KeepBalls>(geometry_)) {
        throw DomainError("not a ball geometry");
    }
    return scale_;
}

std::string ControlRegion::describe() const {
    std::ostringstream out;
    out.precision(17);
    std::visit(Overloaded{
                   [&](const KeepScaledSimplex &g) { out << "scaled_simplex(epsilon=" << g.epsilon << ")"; },
                   [&](const KeepCoordinateCut &g) { out << "cut(coord=" << g.coord << ",epsilon=" << g.epsilon << ")"; },
                   [&](const KeepBalls &g) {
                       out << "balls(k=" << g.centers.size() << ",epsilon=" << g.epsilon << ")";
                   },
                   [&](const KeepPredicate &g) { out << g.description << "(epsilon=" << g.epsilon << ")"; },
               },
               geometry_);
    return out.str();
}

}  // namespace gtr
