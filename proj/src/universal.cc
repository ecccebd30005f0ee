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

#include "gtr/universal.h"

#include <array>
#include <bit>
#include <cstdint>

#include "gtr/errors.h"
#include "parallel.h"

namespace gtr {

namespace {

constexpr std::size_t kHardCellLimit = 40;

void check_enumerable(std::size_t n, const EnumerationOptions &options) {
    if (n == 0) {
        throw DomainError("an elastic needs at least one cell");
    }
    if (n > options.max_cells || n > kHardCellLimit) {
        throw DomainError("n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                          std::to_string(std::min(options.max_cells, kHardCellLimit)) + " cells");
    }
}

/// Sums M per-mask integer quantities over all non-empty n-bit masks,
/// bucketed by the number of breakable cells k. Returns sums[k][q].
template <std::size_t M, class Fn>
std::vector<std::array<std::uint64_t, M>> sums_by_breakable(std::size_t n, unsigned threads, Fn per_mask) {
    using Row = std::array<std::uint64_t, M>;
    const std::uint64_t end = std::uint64_t{1} << n;
    constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
    const std::uint64_t n_chunks = (end + kChunk - 1) / kChunk;
    std::vector<std::vector<Row>> partial(n_chunks, std::vector<Row>(n + 1, Row{}));
    detail::for_each_chunk(n_chunks, threads, [&](std::uint64_t c) {
        auto &acc = partial[c];
        const std::uint64_t lo = std::max<std::uint64_t>(1, c * kChunk);
        const std::uint64_t hi = std::min(end, (c + 1) * kChunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const Row v = per_mask(mask);
            auto &row = acc[std::popcount(mask)];
            for (std::size_t q = 0; q < M; ++q) {
                row[q] += v[q];
            }
        }
    });
    std::vector<Row> total(n + 1, Row{});
    for (const auto &acc : partial) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t q = 0; q < M; ++q) {
                total[k][q] += acc[k][q];
            }
        }
    }
    return total;
}

/// sum_k sums[k][q] / k.
template <std::size_t M>
Rational weighted_by_inverse_k(const std::vector<std::array<std::uint64_t, M>> &sums, std::size_t q) {
    Rational r = 0;
    for (std::size_t k = 1; k < sums.size(); ++k) {
        if (sums[k][q] != 0) {
            r += Rational(BigInt(sums[k][q]), BigInt(k));
        }
    }
    return r;
}

Rational mask_count(std::size_t n) { return Rational((BigInt(1) << n) - 1); }

/// Average over masks of (breakable cells at bit index >= i) / k.
Rational average_right_fraction(std::size_t n, std::size_t i, unsigned threads) {
    const auto sums = sums_by_breakable<1>(n, threads, [i](std::uint64_t mask) {
        return std::array<std::uint64_t, 1>{static_cast<std::uint64_t>(std::popcount(mask >> i))};
    });
    return weighted_by_inverse_k(sums, 0) / mask_count(n);
}

Rational inverse_binomial_sum(std::size_t n) {
    Rational s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        s += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), BigInt(k + 1));
    }
    return s;
}

Rational weighted_binomial_sum(std::size_t n) {
    Rational s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        s += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * k, BigInt(k + 1));
    }
    return s;
}

}  // namespace

ElasticConfiguration1D::ElasticConfiguration1D(CellularMask mask, std::size_t position)
    : mask_(std::move(mask)), position_(position) {
    if (position_ < 1 || position_ + 1 > mask_.n_cells()) {
        throw DomainError("particle position must be in 1.." + std::to_string(mask_.n_cells() - 1) + ", got " +
                          std::to_string(position_));
    }
}

std::size_t ElasticConfiguration1D::breakable_right() const {
    std::size_t k = 0;
    for (std::size_t c = position_; c < mask_.n_cells(); ++c) {
        k += mask_.breakable(c);
    }
    return k;
}

ExactProbability transition_probability_1d(const ElasticConfiguration1D &config, ElasticEnd target) {
    ExactProbability left(Rational(BigInt(config.breakable_right()), BigInt(config.mask().n_breakable())));
    return target == ElasticEnd::Left ? left : left.complement();
}

ExactProbability universal_average_1d(std::size_t n, std::size_t i, ElasticEnd target,
                                      const EnumerationOptions &options) {
    check_enumerable(n, options);
    if (i < 1 || i + 1 > n) {
        throw DomainError("particle position must be in 1..n-1");
    }
    ExactProbability left(average_right_fraction(n, i, options.threads));
    return target == ElasticEnd::Left ? left : left.complement();
}

ExactProbability universal_average_abstract(std::size_t n_c, std::size_t i, const EnumerationOptions &options) {
    check_enumerable(n_c, options);
    if (i > n_c) {
        throw DomainError("complement size i must be in 0..n_c");
    }
    return ExactProbability(average_right_fraction(n_c, i, options.threads));
}

IdentityCheck binomial_identity_a(std::size_t n) {
    const Rational two_n(BigInt(1) << n);
    const auto nn = static_cast<long long>(n);
    return {n, weighted_binomial_sum(n), (two_n * (nn - 1) + 1) / (nn + 1)};
}

IdentityCheck binomial_identity_b(std::size_t n) {
    const Rational two_n1(BigInt(1) << (n + 1));
    return {n, inverse_binomial_sum(n), (two_n1 - 1) / static_cast<long long>(n + 1)};
}

bool RecurrenceReport::all_equal() const {
    if (!per_mask_difference_holds) {
        return false;
    }
    for (const auto &t : terms) {
        if (!t.equal()) {
            return false;
        }
    }
    return true;
}

RecurrenceReport recurrence_step_check(std::size_t n, std::size_t i, const EnumerationOptions &options) {
    check_enumerable(n, options);
    if (n < 3 || i < 1 || i + 2 > n) {
        throw DomainError("recurrence check needs n >= 3 and 1 <= i <= n-2");
    }
    enum : std::size_t {
        kPi,
        kPnext,
        kUnbreakPnext,
        kUnbreakPi,
        kBreakPi,
        kBreakPnext,
        kBreakCount,
        kViolations,
        kFirstUnbreak,
        kFirstBreak,
        kQuantities
    };
    const auto sums = sums_by_breakable<kQuantities>(n, options.threads, [i](std::uint64_t mask) {
        std::array<std::uint64_t, kQuantities> v{};
        const auto right_i = static_cast<std::uint64_t>(std::popcount(mask >> i));
        const auto right_next = static_cast<std::uint64_t>(std::popcount(mask >> (i + 1)));
        const bool next_breakable = (mask >> i) & 1;
        v[kPi] = right_i;
        v[kPnext] = right_next;
        if (next_breakable) {
            v[kBreakPi] = right_i;
            v[kBreakPnext] = right_next;
            v[kBreakCount] = 1;
            v[kViolations] = right_next + 1 != right_i;
        } else {
            v[kUnbreakPi] = right_i;
            v[kUnbreakPnext] = right_next;
        }
        const auto right_1 = static_cast<std::uint64_t>(std::popcount(mask >> 1));
        (mask & 1 ? v[kFirstBreak] : v[kFirstUnbreak]) = right_1;
        return v;
    });
    auto e = [&](std::size_t q) { return weighted_by_inverse_k(sums, q); };

    std::uint64_t violations = 0;
    for (const auto &row : sums) {
        violations += row[kViolations];
    }

    const Rational masks = mask_count(n);
    const auto nn = static_cast<long long>(n);
    const auto ii = static_cast<long long>(i);
    const Rational sum_pi = masks * (nn - ii) / nn;
    const Rational diff = e(kBreakPnext) - e(kBreakPi);

    RecurrenceReport r;
    r.n = n;
    r.i = i;
    r.per_mask_difference_holds = violations == 0;
    r.difference_sum_index_n_minus_1 = -inverse_binomial_sum(n - 1);
    r.difference_sum_index_n = -inverse_binomial_sum(n);
    const bool m1 = diff == r.difference_sum_index_n_minus_1;
    const bool m0 = diff == r.difference_sum_index_n;
    r.matching_index = m1 && m0 ? "both" : m1 ? "n-1" : m0 ? "n" : "none";

    const Rational half_masks(BigInt(1) << (n - 1));
    r.terms = {
        {"sum_p_i", e(kPi), sum_pi},
        {"sum_p_next", e(kPnext), masks * (nn - ii - 1) / nn},
        {"unbreakable_next_shift", e(kUnbreakPnext), e(kUnbreakPi)},
        {"unbreakable_next_sum", e(kUnbreakPnext), sum_pi - e(kBreakPi)},
        {"difference_sum", diff, -masks / nn},
        {"difference_inverse_k", -e(kBreakCount), r.difference_sum_index_n_minus_1},
        {"sum_next_from_difference", e(kPnext), sum_pi + diff},
        {"base_unbreakable_first", e(kFirstUnbreak), half_masks - 1},
        {"base_breakable_first", e(kFirstBreak), (half_masks * (nn - 2) + 1) / nn},
        {"base_breakable_first_binomial", e(kFirstBreak), weighted_binomial_sum(n - 1)},
    };
    return r;
}

}  // namespace gtr
