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

#include "gtr/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "gtr/errors.h"

namespace gtr {

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

BarycentricState::BarycentricState(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw DomainError("a simplex state needs at least 2 outcomes");
    }
    double sum = 0;
    for (double c : coords_) {
        if (!std::isfinite(c) || c < 0) {
            throw DomainError("barycentric weights must be finite and non-negative: " + to_string());
        }
        sum += c;
    }
    if (std::abs(sum - 1) > kSumTolerance) {
        throw DomainError("barycentric weights must sum to 1: " + to_string());
    }
}

BarycentricState BarycentricState::vertex(std::size_t n, std::size_t i) {
    if (i >= n) {
        throw DomainError("vertex index out of range");
    }
    std::vector<double> c(n, 0.0);
    c[i] = 1.0;
    return BarycentricState(std::move(c));
}

BarycentricState BarycentricState::centroid(std::size_t n) {
    if (n < 2) {
        throw DomainError("a simplex state needs at least 2 outcomes");
    }
    return normalized(std::vector<double>(n, 1.0));
}

BarycentricState BarycentricState::normalized(std::vector<double> weights) {
    double sum = 0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0) {
            throw DomainError("weights must be finite and non-negative");
        }
        sum += w;
    }
    if (!(sum > 0)) {
        throw DomainError("weights must not all be zero");
    }
    for (double &w : weights) {
        w /= sum;
    }
    return BarycentricState(std::move(weights));
}

std::string BarycentricState::to_string() const {
    std::ostringstream out;
    out.precision(17);
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out << (i ? "," : "") << coords_[i];
    }
    out << ')';
    return out.str();
}

ExactBarycentricState::ExactBarycentricState(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw DomainError("a simplex state needs at least 2 outcomes");
    }
    Rational sum = 0;
    for (const auto &c : coords_) {
        if (c < 0) {
            throw DomainError("barycentric weights must be non-negative");
        }
        sum += c;
    }
    if (sum != 1) {
        throw DomainError("exact barycentric weights must sum to exactly 1");
    }
}

BarycentricState ExactBarycentricState::to_double() const {
    std::vector<double> c;
    c.reserve(coords_.size());
    for (const auto &r : coords_) {
        c.push_back(r.convert_to<double>());
    }
    return BarycentricState::normalized(std::move(c));
}

RegionLabel RegionLabel::outcome(std::size_t i) { return RegionLabel({i}); }

RegionLabel RegionLabel::boundary(std::vector<std::size_t> tied) {
    std::sort(tied.begin(), tied.end());
    tied.erase(std::unique(tied.begin(), tied.end()), tied.end());
    if (tied.size() < 2) {
        throw DomainError("a boundary label needs at least two distinct outcomes");
    }
    return RegionLabel(std::move(tied));
}

RegionLabel region_of(const BarycentricState &lambda, const BarycentricState &x) {
    require_same_dimension(lambda.n_outcomes(), x.n_outcomes());
    const std::size_t n = x.n_outcomes();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Fast path: a single pass tracking the minimum, then a tie scan only
    // when a second ratio lands near it.
    double best = inf;
    std::size_t best_j = 0;
    double second = inf;
    for (std::size_t j = 0; j < n; ++j) {
        double r = x[j] > 0 ? lambda[j] / x[j] : inf;
        if (r < best) {
            second = best;
            best = r;
            best_j = j;
        } else if (r < second) {
            second = r;
        }
    }
    double limit = best + kTieTolerance * best;
    if (second > limit) {
        return RegionLabel::outcome(best_j);
    }
    std::vector<std::size_t> tied;
    for (std::size_t j = 0; j < n; ++j) {
        double r = x[j] > 0 ? lambda[j] / x[j] : inf;
        if (r <= limit) {
            tied.push_back(j);
        }
    }
    return RegionLabel::boundary(std::move(tied));
}

RegionLabel region_of(const ExactBarycentricState &lambda, const ExactBarycentricState &x) {
    require_same_dimension(lambda.n_outcomes(), x.n_outcomes());
    std::vector<std::size_t> tied;
    Rational best;
    for (std::size_t j = 0; j < x.n_outcomes(); ++j) {
        if (x[j] == 0) {
            continue;
        }
        Rational r = lambda[j] / x[j];
        if (tied.empty() || r < best) {
            best = r;
            tied.assign(1, j);
        } else if (r == best) {
            tied.push_back(j);
        }
    }
    if (tied.size() == 1) {
        return RegionLabel::outcome(tied.front());
    }
    return RegionLabel::boundary(std::move(tied));
}

std::vector<std::vector<double>> internal_basis(std::size_t n) {
    if (n < 2) {
        throw DomainError("a simplex needs at least 2 vertices");
    }
    std::vector<std::vector<double>> basis;
    basis.reserve(n - 1);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::vector<double> axis(n, 0.0);
        double norm = std::sqrt(static_cast<double>(k * (k + 1)));
        for (std::size_t j = 1; j <= k; ++j) {
            axis[j] = -1.0 / norm;
        }
        axis[k + 1] = static_cast<double>(k) / norm;
        basis.push_back(std::move(axis));
    }
    std::vector<double> last(n, -1.0 / std::sqrt(static_cast<double>(n * (n - 1))));
    last[0] = static_cast<double>(n - 1) / std::sqrt(static_cast<double>(n * (n - 1)));
    basis.push_back(std::move(last));
    return basis;
}

std::vector<double> to_internal_coords(const BarycentricState &p) {
    auto basis = internal_basis(p.n_outcomes());
    std::vector<double> z;
    z.reserve(basis.size());
    for (const auto &axis : basis) {
        z.push_back(std::inner_product(axis.begin(), axis.end(), p.coords().begin(), 0.0));
    }
    return z;
}

BarycentricState from_internal_coords(std::span<const double> z, std::size_t n) {
    if (n < 2 || z.size() + 1 != n) {
        throw DomainError("expected " + std::to_string(n - 1) + " internal coordinates");
    }
    auto basis = internal_basis(n);
    std::vector<double> y(n, 1.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            y[j] += z[k] * basis[k][j];
        }
    }
    for (double &c : y) {
        if (c < -kSumTolerance) {
            throw DomainError("internal coordinates map outside the simplex");
        }
        c = std::max(c, 0.0);
    }
    return BarycentricState::normalized(std::move(y));
}

double simplex_measure(std::size_t n) {
    if (n < 2) {
        throw DomainError("simplex_measure needs n >= 2");
    }
    return std::sqrt(static_cast<double>(n)) / std::tgamma(static_cast<double>(n));
}

double distance(const BarycentricState &a, const BarycentricState &b) {
    require_same_dimension(a.n_outcomes(), b.n_outcomes());
    double s = 0;
    for (std::size_t j = 0; j < a.n_outcomes(); ++j) {
        double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace gtr
