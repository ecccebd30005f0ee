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

#include <string>
#include <vector>

#include "gtr/density.h"
#include "gtr/rational.h"

namespace gtr {

/// Ends of a 1-D elastic. Breakable cells to the right of the particle pull
/// it to the left end, so P(i -> Left) = k_i / k with k_i the breakable cells
/// right of position i and k all breakable cells. In the simplex picture the
/// left end is the vertex of outcome 1 and the right end that of outcome 0.
enum class ElasticEnd { Left, Right };

/// A particle at the contact point between cells i and i+1 (1-based) of an
/// n-cell elastic; 1 <= i <= n-1.
class ElasticConfiguration1D {
   public:
    ElasticConfiguration1D(CellularMask mask, std::size_t position);

    const CellularMask &mask() const { return mask_; }
    std::size_t position() const { return position_; }
    /// Breakable cells among i+1..n.
    std::size_t breakable_right() const;

   private:
    CellularMask mask_;
    std::size_t position_;
};

ExactProbability transition_probability_1d(const ElasticConfiguration1D &config, ElasticEnd target);

struct EnumerationOptions {
    std::size_t max_cells = 24;
    unsigned threads = 1;
};

/// Average of P(i -> target) over all 2^n - 1 non-empty masks of an n-cell
/// elastic, by exhaustive enumeration. Throws DomainError when
/// i is outside 1..n-1 or n exceeds options.max_cells.
ExactProbability universal_average_1d(std::size_t n, std::size_t i, ElasticEnd target,
                                      const EnumerationOptions &options = {});

/// Average over all 2^n_c - 1 non-empty masks of the fraction of breakable
/// cells that lie in the last n_c - i cells. 0 <= i <= n_c.
ExactProbability universal_average_abstract(std::size_t n_c, std::size_t i, const EnumerationOptions &options = {});

struct IdentityCheck {
    std::size_t n = 0;
    Rational lhs;
    Rational rhs;
    bool equal() const { return lhs == rhs; }
};

/// sum_{k=0}^{n} k/(k+1) C(n,k)  vs  (2^n (n-1) + 1) / (n+1).
IdentityCheck binomial_identity_a(std::size_t n);
/// sum_{k=0}^{n} 1/(k+1) C(n,k)  vs  (2^(n+1) - 1) / (n+1).
IdentityCheck binomial_identity_b(std::size_t n);

struct RecurrenceTerm {
    std::string name;
    Rational enumerated;
    Rational closed_form;
    bool equal() const { return enumerated == closed_form; }
};

/// Intermediate quantities of the induction from position i to i+1,
/// each computed by enumeration over all non-empty n-cell masks and
/// compared with its closed form. Sums run over masks; "next" refers to
/// cell i+1.
struct RecurrenceReport {
    std::size_t n = 0;
    std::size_t i = 0;
    std::vector<RecurrenceTerm> terms;
    /// Whether P(i+1 -> Left) - P(i -> Left) = -1/k on every mask whose cell
    /// i+1 is breakable.
    bool per_mask_difference_holds = false;
    /// Closed forms of the difference sum under both readings of its upper
    /// summation index; the n-1 reading is the one used in `terms`.
    Rational difference_sum_index_n_minus_1;
    Rational difference_sum_index_n;
    std::string matching_index;  // "n-1", "n", "both" or "none"

    bool all_equal() const;
};

/// Requires 3 <= n <= options.max_cells and 1 <= i <= n-2.
RecurrenceReport recurrence_step_check(std::size_t n, std::size_t i, const EnumerationOptions &options = {});

}  // namespace gtr
