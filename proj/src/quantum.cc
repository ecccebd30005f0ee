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

#include "gtr/quantum.h"

#include <cmath>

#include "gtr/errors.h"

namespace gtr {

QuantumState::QuantumState(std::vector<PolarAmplitude> amplitudes, std::optional<std::vector<double>> eigenvalues)
    : amplitudes_(std::move(amplitudes)), eigenvalues_(std::move(eigenvalues)) {
    if (amplitudes_.empty()) {
        throw DomainError("a quantum state needs at least one amplitude");
    }
    if (eigenvalues_ && eigenvalues_->size() != amplitudes_.size()) {
        throw DomainError("one eigenvalue label per amplitude expected");
    }
    double norm = 0;
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.modulus_squared) || a.modulus_squared < 0 || !std::isfinite(a.phase)) {
            throw DomainError("amplitude moduli must be finite and non-negative");
        }
        norm += a.modulus_squared;
    }
    if (std::abs(norm - 1) > kSumTolerance) {
        throw DomainError("quantum state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
}

QuantumState QuantumState::from_amplitudes(std::span<const std::complex<double>> amplitudes) {
    std::vector<PolarAmplitude> polar;
    polar.reserve(amplitudes.size());
    for (const auto &c : amplitudes) {
        polar.push_back({std::norm(c), std::arg(c)});
    }
    return QuantumState(std::move(polar));
}

std::complex<double> QuantumState::amplitude(std::size_t i) const {
    const auto &a = amplitudes_.at(i);
    return std::polar(std::sqrt(a.modulus_squared), a.phase);
}

std::vector<double> born_probabilities(const QuantumState &psi) {
    std::vector<double> p;
    p.reserve(psi.dimension());
    for (const auto &a : psi.amplitudes()) {
        p.push_back(a.modulus_squared);
    }
    return p;
}

BarycentricState to_simplex_state(const QuantumState &psi) { return BarycentricState(born_probabilities(psi)); }

}  // namespace gtr
