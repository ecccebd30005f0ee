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

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "gtr/simplex.h"

namespace gtr {

/// One coefficient <a_i|psi> = sqrt(x_i) e^{i alpha_i} in polar form.
struct PolarAmplitude {
    double modulus_squared = 0;
    double phase = 0;  // radians
};

/// A normalized state of an N-level system, expanded on the eigenbasis of a
/// non-degenerate observable. Eigenvalues are optional labels only.
class QuantumState {
   public:
    /// Throws DomainError if any modulus is negative or the moduli do not sum
    /// to 1 within kSumTolerance.
    explicit QuantumState(std::vector<PolarAmplitude> amplitudes, std::optional<std::vector<double>> eigenvalues = {});

    /// Builds the state from rectangular amplitudes.
    static QuantumState from_amplitudes(std::span<const std::complex<double>> amplitudes);

    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const PolarAmplitude> amplitudes() const { return amplitudes_; }
    const std::optional<std::vector<double>> &eigenvalues() const { return eigenvalues_; }
    std::complex<double> amplitude(std::size_t i) const;

   private:
    std::vector<PolarAmplitude> amplitudes_;
    std::optional<std::vector<double>> eigenvalues_;
};

/// Born rule: P(psi -> a_i) = |<a_i|psi>|^2 = x_i.
std::vector<double> born_probabilities(const QuantumState &psi);

/// The simplex point whose weights are the Born probabilities of psi.
BarycentricState to_simplex_state(const QuantumState &psi);

}  // namespace gtr
