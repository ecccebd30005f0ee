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

#include <stdexcept>

namespace gtr {

/// Input violates a type invariant or operation precondition.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A transition probability was requested in closed form for a density
/// that only supports Monte Carlo estimation.
class NotAnalyticError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A control region removed all of a density's mass.
class DegenerateTruncationError : public DomainError {
   public:
    using DomainError::DomainError;
};

}  // namespace gtr
